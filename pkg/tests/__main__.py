
import sys
import unittest
import logging
from fnmatch import fnmatch
import argparse

from heckecells.logger import basicConfig, verbosityLevel

def matcher(patterns):
    """ keep tests whose TestCase.method name matches one of the globs """
    def match(test):
        # qualname example: InducedTestCase.test_kl_element_example
        s = getattr(test, test._testMethodName).__qualname__
        return any(fnmatch(s, p) for p in patterns)
    return match

def select(suite, match):
    """ filter a discovered suite in place, at any nesting depth """
    for test in list(suite._tests):
        if isinstance(test, unittest.TestSuite):
            select(test, match)
    suite._tests = [test for test in suite._tests
        if isinstance(test, unittest.TestSuite) or match(test)]

def main():

    parser = argparse.ArgumentParser(description='Run the heckecells test suite.')

    parser.add_argument('-v', '--verbose', action='count', default=0,
                    help='set verbosity, -vvv and above also show heckecells log output')

    parser.add_argument('-f', '--filter', action='append',
                    help='test filter, a glob on TestCase.method, e.g. "*Filtration*"')

    parser.add_argument('-x', '--failfast', action='store_true',
                    help='stop on the first failure')

    args = parser.parse_args()

    if args.verbose >= 3:
        # -vvv shows warnings, each further -v one more heckecells level
        basicConfig(verbosityLevel(args.verbose - 3))
        verbose = 2
    else:
        logging.basicConfig(level=100) # quiet
        verbose = args.verbose

    test_loader = unittest.defaultTestLoader
    test_runner = unittest.TextTestRunner(verbosity=verbose, failfast=args.failfast)
    test_suite = test_loader.discover("./tests", pattern='*_test.py')

    if args.filter:
        select(test_suite, matcher(args.filter))

    result = test_runner.run(test_suite)
    return 0 if result.wasSuccessful() else 1

if __name__ == '__main__':
    sys.exit(main())
