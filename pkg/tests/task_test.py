
import unittest

from heckecells.task import TaskPool
from heckecells.hecke import kl_table

def multiply(x, y):
    return x * y

def divide(x, y):
    return x // y

def table_size(n):
    return len(kl_table(n).columns)

class TaskTestCase(unittest.TestCase):

    def setUp(self):
        self.pool = TaskPool(2)

    def tearDown(self):
        self.pool.shutdown()

    def test_task_success(self):
        results = []
        self.pool.submit(multiply, (6, 7), callback=results.append)
        self.pool.join()
        self.assertEqual(results, [42])
        self.assertEqual(self.pool.pending(), 0)

    def test_task_failure(self):
        errors = []
        self.pool.submit(divide, (6, 0), callback=errors.append, error_callback=errors.append)
        self.pool.join()
        self.assertEqual(len(errors), 1)
        self.assertIsInstance(errors[0], ZeroDivisionError)

    def test_callback_failure_is_contained(self):
        def callback(result):
            raise ValueError(result)

        results = []
        self.pool.submit(multiply, (2, 3), callback=callback)
        self.pool.submit(multiply, (3, 3), callback=results.append)
        self.pool.join()
        self.assertEqual(results, [9])

    def test_many_tasks(self):
        results = {}
        for n in range(1, 5):
            self.pool.submit(table_size, (n,), callback=lambda size, n=n: results.__setitem__(n, size))
        self.pool.join()
        self.assertEqual(results, {1: 1, 2: 2, 3: 6, 4: 24})

def main():
    unittest.main()

if __name__ == '__main__':
    main()
