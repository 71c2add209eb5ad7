
import os
import shutil
import tempfile
import unittest
from unittest import mock

from heckecells.laurent import LaurentPoly, ONE, V
from heckecells.hecke import KLTable, kl_table
from heckecells.klcache import KLCache, CacheCorrupt, CacheHeader, PairRecord, \
    ENV_CACHE_DIR, file_digest, revalidate

class KLCacheTestCase(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.cache = KLCache(self.tmpdir)

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_round_trip(self):
        t = kl_table(4)
        self.cache.save(t)
        self.assertTrue(self.cache.exists(4))
        self.assertFalse(self.cache.exists(5))
        loaded = self.cache.load(4)
        self.assertEqual(loaded, t)
        self.assertIsNot(loaded, t)

    def test_missing(self):
        self.assertIsNone(self.cache.load(3))

    def test_file_format(self):
        self.cache.save(kl_table(2))
        with open(self.cache.pathFor(2)) as f:
            lines = f.read().splitlines()
        header = CacheHeader.loads(lines[0])
        self.assertEqual((header.format, header.version, header.n), ("klcache", 1, 2))
        records = [PairRecord.loads(line) for line in lines[1:]]
        self.assertEqual(len(records), 3)
        self.assertEqual(records[1].h, V)
        self.assertEqual(str(records[1].y), "12")
        self.assertEqual(str(records[1].x), "21")

    def test_deterministic(self):
        t = kl_table(3)
        self.cache.save(t)
        first = file_digest(self.cache.pathFor(3))
        self.cache.save(t)
        self.assertEqual(file_digest(self.cache.pathFor(3)), first)

    def test_digest_mismatch(self):
        self.cache.save(kl_table(3))
        with open(self.cache.pathFor(3), "a") as f:
            f.write("\n")
        with self.assertRaises(CacheCorrupt):
            self.cache.load(3)

    def test_missing_digest(self):
        self.cache.save(kl_table(3))
        os.remove(self.cache.pathFor(3) + ".sha256")
        with self.assertRaises(CacheCorrupt):
            self.cache.load(3)

    def test_tampered_diagonal(self):
        path = self.cache.pathFor(3)
        self.cache.save(kl_table(3))
        with open(path) as f:
            text = f.read()
        text = text.replace('"h": {"min_deg": 0, "coeffs": [1]}', '"h": {"min_deg": 0, "coeffs": [2]}', 1)
        with open(path, "w") as f:
            f.write(text)
        with open(path + ".sha256", "w") as f:
            f.write(file_digest(path) + "\n")
        with self.assertRaises(CacheCorrupt):
            self.cache.load(3)

    def test_malformed_record(self):
        path = self.cache.pathFor(2)
        self.cache.save(kl_table(2))
        with open(path, "a") as f:
            f.write('{"y": [1, 1], "x": [2, 1], "h": {"min_deg": 0, "coeffs": [1]}}\n')
        with open(path + ".sha256", "w") as f:
            f.write(file_digest(path) + "\n")
        with self.assertRaises(CacheCorrupt):
            self.cache.load(2)

    def test_wrong_rank(self):
        cache = KLCache(os.path.join(self.tmpdir, "single.jsonl"))
        cache.save(kl_table(3))
        self.assertEqual(cache.pathFor(4), cache.pathFor(3))
        with self.assertRaises(CacheCorrupt):
            cache.load(4)

    def test_kl_table_writes_cache(self):
        t = kl_table(3, self.cache)
        self.assertTrue(self.cache.exists(3))
        self.assertEqual(kl_table(3, self.cache), t)

    def test_env_location(self):
        with mock.patch.dict(os.environ, {ENV_CACHE_DIR: self.tmpdir}):
            self.assertEqual(KLCache().location, self.tmpdir)
        with mock.patch.dict(os.environ, {}, clear=True):
            with self.assertRaises(ValueError):
                KLCache()

class RevalidateTestCase(unittest.TestCase):

    def test_valid(self):
        revalidate(kl_table(4), fraction=1.0)

    def test_wrong_polynomial(self):
        t = kl_table(3)
        columns = [dict(col) for col in t.columns]
        # h(e, s1 s2) is v^2; v^2 + v^4 is in vZ[v] but wrong
        columns[3][0] = columns[3][0] + LaurentPoly.monomial(1, 4)
        with self.assertRaises(CacheCorrupt):
            revalidate(KLTable(3, columns), fraction=1.0)

    def test_bad_degree(self):
        t = kl_table(3)
        columns = [dict(col) for col in t.columns]
        columns[1][0] = ONE
        with self.assertRaises(CacheCorrupt):
            revalidate(KLTable(3, columns), fraction=1.0)

def main():
    unittest.main()

if __name__ == '__main__':
    main()
