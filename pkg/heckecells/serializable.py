#! cd .. && python -m heckecells.serializable

"""
# Typed JSON records

Every file heckecells writes (command output, KL cache records, run
configurations) is produced from a `Serializable` record. A record is a class
whose public, annotated class attributes are its fields. The annotations
drive the conversion to and from JSON, so nested containers round trip with
their element types intact.

```python

from typing import List, Dict

class Kind(SerializableEnum):
    SIGN=1
    PERMUTATION=2

class ModuleReport(Serializable):
    n: int = 0
    kind: Kind = Kind.SIGN
    basis: List[Permutation] = None
    action: Dict[int, List[List[LaurentPoly]]] = None

report = ModuleReport(n=3, kind=Kind.PERMUTATION)
text = report.dumps()
report2 = ModuleReport.loads(text)
```

Domain values take part by implementing `toJson()` and a `fromJson(value)`
class method. `LaurentPoly`, `RationalFunction`, `Permutation` and
`Partition` all do.

The conversion rules are:

1. dictionary keys are converted to strings. The key type must accept the
   string back (integers and SerializableEnum do).
2. SerializableEnum values are written by name.
3. List/Set/Tuple are all written as JSON arrays, and read back into the
   annotated container type.
4. Field order in the output is the order of definition in the class body,
   which keeps output byte-stable.
"""
import json
import inspect
from typing import get_args, get_origin
from collections.abc import Iterable, Sequence, Mapping

from .logger import hklogger

def _default():
    class Default(object):
        def __repr__(self):
            return "serializable.Default"
    return Default()
Default = _default()

def ispublic(cls, name):
    return not name.startswith("_") and not callable(getattr(cls, name))

class SerializableError(Exception):
    pass

class SerializableType(type):
    """
    Metaclass for Serializable records. Collects the public class attributes
    of a record as its fields, in definition order.
    """
    names = {}

    def __new__(metacls, name, bases, namespace):
        cls = super().__new__(metacls, name, bases, namespace)
        if name == 'Serializable':
            return cls
        annotations = {}
        for base in reversed(cls.mro()):
            annotations.update(inspect.get_annotations(base))
        cls._annotations = annotations
        fields = []
        for base in reversed(cls.mro()):
            for attr in base.__dict__:
                if attr in annotations and attr not in fields and ispublic(cls, attr):
                    fields.append(attr)
        for attr in cls.__dict__:
            if ispublic(cls, attr) and attr not in annotations:
                hklogger.info("missing annotation for %s.%s", cls.__name__, attr)
        cls._fields = tuple(fields)
        SerializableType.names[cls.__name__] = cls
        return cls

def _fromJsonValue(type_, value):
    if value is None:
        return None
    origin = get_origin(type_)
    if origin is not None:
        args = get_args(type_)
        if origin in (list, set) and isinstance(value, (Iterable, Sequence)):
            return origin(_fromJsonValue(args[0], item) for item in value)
        elif origin is dict and isinstance(value, Mapping):
            return {_fromJsonValue(args[0], k): _fromJsonValue(args[1], v)
                for k, v in value.items()}
        elif origin is tuple and isinstance(value, (Iterable, Sequence)):
            if len(args) == 2 and args[1] is Ellipsis:
                return tuple(_fromJsonValue(args[0], item) for item in value)
            items = []
            for i, t in enumerate(args):
                if i < len(value):
                    items.append(_fromJsonValue(t, value[i]))
                else:
                    # for missing values pad the tuple with null values
                    items.append(None)
            return tuple(items)
        raise SerializableError("%s != %s" % (origin, type(value)))
    if isinstance(type_, SerializableEnumType):
        return type_(type_.fromJson(value))
    if hasattr(type_, 'fromJson'):
        return type_.fromJson(value)
    try:
        return type_(value)
    except (TypeError, ValueError) as e:
        raise SerializableError("unable to convert %r to %s: %s" % (value, type_, e))

def _toJsonValue(type_, value):
    if value is None:
        return None
    origin = get_origin(type_)
    if origin is not None:
        args = get_args(type_)
        if origin in (list, set):
            return [_toJsonValue(args[0], item) for item in value]
        elif origin is dict:
            return {_toJsonKey(args[0], k): _toJsonValue(args[1], v)
                for k, v in value.items()}
        elif origin is tuple:
            if len(args) == 2 and args[1] is Ellipsis:
                return [_toJsonValue(args[0], item) for item in value]
            items = []
            for i, t in enumerate(args):
                items.append(_toJsonValue(t, value[i]) if i < len(value) else None)
            return items
        raise SerializableError("unsupported container %s" % origin)
    if hasattr(value, 'toJson'):
        return value.toJson()
    return value

def _toJsonKey(type_, key):
    key = _toJsonValue(type_, key)
    if isinstance(key, (list, tuple)):
        return ",".join(str(k) for k in key)
    return key

class Serializable(object, metaclass=SerializableType):
    """ Base class for defining a new JSON record type.

    Fields without a value are initialized to an empty container of the
    annotated type, or to `type()` when the class default is `Default`.
    """

    def __init__(self, **kwargs):

        for attr in self._fields:
            t = self._annotations[attr]
            if get_origin(t) in (dict, list, set) and getattr(self, attr) is None:
                setattr(self, attr, get_origin(t)())
            elif getattr(self, attr) is Default:
                setattr(self, attr, t())

        for k, v in kwargs.items():
            if k in self._fields:
                setattr(self, k, v)
            else:
                raise SerializableError("%s has no field %s" % (self.__class__.__name__, k))

    def __repr__(self):
        values = ["%r:%r" % (f, getattr(self, f)) for f in self._fields]
        return "%s({%s})" % (self.__class__.__name__, ", ".join(values))

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return all(getattr(self, f) == getattr(other, f) for f in self._fields)

    def dumps(self, indent=None, sort_keys=False, **kwargs):
        return json.dumps(self.toJson(), indent=indent, sort_keys=sort_keys, **kwargs)

    @classmethod
    def loads(cls, string, **kwargs):
        try:
            record = json.loads(string, **kwargs)
        except json.JSONDecodeError as e:
            raise SerializableError("invalid JSON for %s: %s" % (cls.__name__, e))
        if not isinstance(record, Mapping):
            raise SerializableError("expected a JSON object for %s" % cls.__name__)
        return cls.fromJson(record)

    @classmethod
    def fromJson(cls, record):
        """ initialize a new instance of Type from a JSON object

        Uses the type annotations for members of Type to determine how
        to convert the JSON object attributes into member attributes.
        Unknown keys in the given record are ignored.

        :param record: a JSON object
        """

        inst = cls()
        for field in inst._fields:
            if field in record:
                setattr(inst, field,
                    _fromJsonValue(inst._annotations[field], record[field]))
        return inst

    def toJson(self):
        """ return a JSON object representation of this record
        """
        obj = {}
        for field in self._fields:
            obj[field] = _toJsonValue(self._annotations[field], getattr(self, field))
        return obj

class SerializableEnumType(type):
    _enums = {}

    def __new__(metacls, name, bases, namespace):
        cls = super().__new__(metacls, name, bases, namespace)
        if name == 'SerializableEnum':
            return cls

        cls._value2name = {}
        cls._name2value = {}
        SerializableEnumType._enums[cls.__name__] = cls

        for name in dir(cls):
            if not name.startswith("_") and not callable(getattr(cls, name)):
                cls._value2name[getattr(cls, name)] = name
                cls._name2value[name] = getattr(cls, name)
        for name, value in cls._name2value.items():
            # wrap the value types as instances of enum
            setattr(cls, name, cls(value))
        return cls

class SerializableEnum(object, metaclass=SerializableEnumType):
    """
    SerializableEnum is a reimplementation of Python's Enum for use inside
    a Serializable. It can be used as a dictionary key and is written to
    JSON by name.

    :attr value: get the underlying value of the enum
    """

    def __init__(self, value=None):
        if isinstance(value, self.__class__):
            self.value = value.value
        elif value in self.__class__._value2name:
            self.value = value
        elif value is None:
            self.value = value
        else:
            raise ValueError(value)

    def __repr__(self):
        return "%s.%s" % (self.__class__.__name__, self._value2name[self.value])

    def __str__(self):
        return self._value2name[self.value].lower()

    def name(self):
        """ return a string representation of the enum value """
        return self.__class__._value2name[self.value]

    @classmethod
    def fromJson(cls, value):
        try:
            return cls(cls._name2value[str(value).upper()])
        except KeyError:
            raise SerializableError("%s has no member %s" % (cls.__name__, value))

    @classmethod
    def members(cls):
        return [cls(v) for v in sorted(cls._value2name)]

    def toJson(self):
        return self.__class__._value2name[self.value].lower()

    def __lt__(self, other):
        return self.value < other.value

    def __eq__(self, other):
        if isinstance(other, SerializableEnum):
            return self.value == other.value
        return self.value == other

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.value)
