#! cd .. && python3 -m heckecells.klcache

"""
# KL table cache

A KL table is stored as JSON lines. The first line is the header

    {"format": "klcache", "version": 1, "n": 4}

followed by one record per nonzero polynomial

    {"y": [1, 2, 3, 4], "x": [2, 1, 3, 4], "h": {"min_deg": 1, "coeffs": [1]}}

ordered by x (length, then lexicographic one-line) and then by y. Saving the
same table twice produces identical files.

Next to the cache file a `.sha256` sidecar holds the hex SHA-256 digest of
the file. On load the digest is checked first, then the table is revalidated:
structural invariants for every column, and a seeded 5% sample of columns is
recomputed from the shorter ones. Any failure raises `CacheCorrupt`.
"""

import os
import random

from cryptography.hazmat.primitives import hashes

from .laurent import LaurentPoly, ONE
from .symgroup import Permutation, symmetric_group
from .hecke import KLTable
from .serializable import Serializable, SerializableError
from .logger import hklogger, ScopedLogger

CACHE_FORMAT = "klcache"
CACHE_VERSION = 1
ENV_CACHE_DIR = "HECKE_CACHE_DIR"
REVALIDATION_FRACTION = 0.05

class CacheCorrupt(Exception):
    pass

class CacheHeader(Serializable):
    format: str = CACHE_FORMAT
    version: int = CACHE_VERSION
    n: int = 0

class PairRecord(Serializable):
    y: Permutation = None
    x: Permutation = None
    h: LaurentPoly = None

def file_digest(path):
    """ hex SHA-256 of a file """
    digest = hashes.Hash(hashes.SHA256())
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.finalize().hex()

class KLCache(object):
    """ a directory or single file holding KL tables

    :param location: a directory, or a file name ending in `.jsonl`.
        Defaults to the directory named by HECKE_CACHE_DIR.
    """
    def __init__(self, location=None):
        super(KLCache, self).__init__()
        if location is None:
            location = os.environ.get(ENV_CACHE_DIR)
        if not location:
            raise ValueError("no cache location given and %s is not set" % ENV_CACHE_DIR)
        self.location = location

    def pathFor(self, n):
        if self.location.endswith(".jsonl"):
            return self.location
        return os.path.join(self.location, "klcache_n%d.jsonl" % n)

    def exists(self, n):
        return os.path.exists(self.pathFor(n))

    def save(self, table):
        path = self.pathFor(table.n)
        parent = os.path.dirname(path)
        if parent and not os.path.exists(parent):
            os.makedirs(parent)
        tmp = path + ".tmp"
        with open(tmp, "w") as f:
            f.write(CacheHeader(n=table.n).dumps() + "\n")
            for y, x, h in table.pairs():
                f.write(PairRecord(y=y, x=x, h=h).dumps() + "\n")
        os.replace(tmp, path)
        with open(path + ".sha256", "w") as f:
            f.write(file_digest(path) + "\n")
        hklogger.info("saved KL table of S%d to %s", table.n, path)

    def load(self, n):
        """ the cached table of Sn, or None when no cache file exists

        :raises CacheCorrupt: when the file fails its digest, its format or revalidation
        """
        path = self.pathFor(n)
        if not os.path.exists(path):
            return None
        self._checkDigest(path)
        G = symmetric_group(n)
        columns = [dict() for _ in range(len(G))]
        try:
            with open(path) as f:
                header = CacheHeader.loads(f.readline())
                if header.format != CACHE_FORMAT or header.version != CACHE_VERSION:
                    raise CacheCorrupt("%s: unsupported format %s version %s" % (
                        path, header.format, header.version))
                if header.n != n:
                    raise CacheCorrupt("%s holds S%d, expected S%d" % (path, header.n, n))
                for lineno, line in enumerate(f, 2):
                    if not line.strip():
                        continue
                    record = PairRecord.loads(line)
                    if record.x is None or record.y is None or record.h is None:
                        raise CacheCorrupt("%s:%d: incomplete record" % (path, lineno))
                    if record.x.n != n or record.y.n != n:
                        raise CacheCorrupt("%s:%d: element of the wrong rank" % (path, lineno))
                    columns[G.index[record.x]][G.index[record.y]] = record.h
        except (SerializableError, ValueError) as e:
            raise CacheCorrupt("%s: %s" % (path, e))
        table = KLTable(n, columns)
        revalidate(table)
        hklogger.info("loaded KL table of S%d from %s", n, path)
        return table

    def _checkDigest(self, path):
        sidecar = path + ".sha256"
        if not os.path.exists(sidecar):
            raise CacheCorrupt("%s has no digest file" % path)
        with open(sidecar) as f:
            expected = f.read().strip()
        actual = file_digest(path)
        if expected != actual:
            hklogger.error("digest mismatch for %s: %s != %s", path, actual, expected)
            raise CacheCorrupt("%s does not match its digest" % path)

def revalidate(table, fraction=REVALIDATION_FRACTION, seed=None):
    """ check the invariants of a loaded table and recompute a sample of columns

    :raises CacheCorrupt: on the first failure
    """
    log = ScopedLogger("S%d" % table.n)
    G = table.group
    for x, col in enumerate(table.columns):
        if col.get(x) != ONE:
            log.error("h(x,x) != 1 for x=%s", G.elements[x])
            raise CacheCorrupt("S%d: diagonal entry at %s is not 1" % (table.n, G.elements[x]))
        for y, h in col.items():
            if y != x and (not h or G.lengths[y] >= G.lengths[x] or not h.in_positive_degrees()):
                log.error("bad entry h(%s,%s) = %s", G.elements[y], G.elements[x], h)
                raise CacheCorrupt("S%d: invalid polynomial at (%s, %s)" % (
                    table.n, G.elements[y], G.elements[x]))
    rng = random.Random(table.n if seed is None else seed)
    candidates = list(range(1, len(G)))
    count = min(len(candidates), max(1, int(round(fraction * len(G)))))
    sample = sorted(rng.sample(candidates, count)) if candidates else []
    for x in sample:
        if table.compute_column(x) != table.columns[x]:
            log.error("column %s does not match its recomputation", G.elements[x])
            raise CacheCorrupt("S%d: column %s fails recomputation" % (table.n, G.elements[x]))
    log.debug("revalidated %d of %d columns", len(sample), len(G))
