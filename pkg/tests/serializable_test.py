
import unittest
from typing import List, Dict, Tuple, Set

from heckecells.laurent import ZERO, ONE, V, LaurentPoly
from heckecells.symgroup import Permutation, Partition
from heckecells.serializable import Serializable, SerializableEnum, SerializableError, Default

class BasicTypes(Serializable):
    v1: int = 0
    v2: float = 0
    v3: str = ""
    v4: bool = False

class Color(SerializableEnum):
    RED=1
    GREEN=2
    BLUE=3

class ColorMap(Serializable):
    cfg: Dict[Color, int] = None

class Position(Serializable):
    pos: Tuple[int, int] = None

class ColorSet(Serializable):
    colors: Set[Color] = None

class Character(Serializable):
    n: int = 0
    values: Dict[Partition, int] = None

class Block(Serializable):
    basis: List[Permutation] = None
    action: Dict[int, List[List[LaurentPoly]]] = None
    count: int = Default

class Nested(Serializable):
    blocks: List[Block] = None

class SerializableTestCase(unittest.TestCase):

    def test_basic_types(self):
        msg = BasicTypes(v1=123, v2=3.14, v3="abc", v4=True)
        msg2 = BasicTypes.loads(msg.dumps())
        self.assertEqual(msg2, msg)
        self.assertEqual(msg.toJson(), {"v1": 123, "v2": 3.14, "v3": "abc", "v4": True})

    def test_defaults(self):
        b = Block()
        self.assertEqual(b.basis, [])
        self.assertEqual(b.action, {})
        self.assertEqual(b.count, 0)
        with self.assertRaises(SerializableError):
            Block(size=3)

    def test_enum(self):
        self.assertTrue(Color.RED < Color.BLUE)
        self.assertTrue(Color.BLUE > Color.RED)
        self.assertEqual(Color.RED.name(), "RED")
        self.assertEqual(str(Color.RED), "red")
        self.assertEqual(repr(Color.RED), "Color.RED")
        self.assertEqual(Color.fromJson("green"), Color.GREEN)
        self.assertEqual(Color.members(), [Color.RED, Color.GREEN, Color.BLUE])
        with self.assertRaises(ValueError):
            Color(1024)
        with self.assertRaises(SerializableError):
            Color.fromJson("purple")

    def test_enum_map(self):
        cfg = {'cfg': {'red': 123, 'blue': 456}}
        msg = ColorMap.fromJson(cfg)
        self.assertEqual(msg.cfg[Color.RED], 123)
        self.assertEqual(msg.toJson(), cfg)

    def test_tuple(self):
        msg = Position.fromJson({'pos': [32, 64]})
        self.assertEqual(msg.pos, (32, 64))
        self.assertEqual(msg.toJson(), {'pos': [32, 64]})

    def test_short_tuple(self):
        msg = Position.fromJson({'pos': [32]})
        self.assertEqual(msg.pos, (32, None))
        self.assertEqual(msg.toJson()['pos'], [32, None])

    def test_set(self):
        msg = ColorSet.fromJson({'colors': ['blue', 'green']})
        self.assertEqual(msg.colors, {Color.BLUE, Color.GREEN})
        obj = msg.toJson()
        self.assertIsInstance(obj['colors'], list)
        self.assertEqual(sorted(obj['colors']), ['blue', 'green'])

    def test_null(self):
        msg = ColorSet.fromJson({'colors': None})
        self.assertIsNone(msg.colors)

    def test_partition_keys(self):
        msg = Character(n=3, values={Partition([3]): 1, Partition([2, 1]): 0})
        obj = msg.toJson()
        self.assertEqual(obj['values'], {"3": 1, "2,1": 0})
        self.assertEqual(Character.loads(msg.dumps()), msg)

    def test_domain_values(self):
        block = Block(basis=[Permutation.parse("213"), Permutation.parse("231")],
            action={1: [[V + V ** -1, ONE], [ONE, ZERO]]}, count=2)
        msg = Nested(blocks=[block, Block()])
        msg2 = Nested.loads(msg.dumps())
        self.assertEqual(msg2, msg)
        self.assertEqual(msg2.blocks[0].action[1][0][0], V + V ** -1)
        self.assertEqual(msg2.blocks[0].basis[1], Permutation.parse("231"))

    def test_invalid_json(self):
        with self.assertRaises(SerializableError):
            BasicTypes.loads("{not json")
        with self.assertRaises(SerializableError):
            BasicTypes.loads("[1, 2]")
        with self.assertRaises(SerializableError):
            BasicTypes.fromJson({"v1": "many"})

    def test_unknown_keys_are_ignored(self):
        msg = BasicTypes.fromJson({"v1": 5, "extra": True})
        self.assertEqual(msg.v1, 5)

    def test_repr(self):
        msg = BasicTypes(v1=1, v3="a")
        # field order is the order of definition
        self.assertEqual(repr(msg), "BasicTypes({'v1':1, 'v2':0, 'v3':'a', 'v4':False})")

def main():
    unittest.main()

if __name__ == '__main__':
    main()
