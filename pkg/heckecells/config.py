#! cd .. && python3 -m heckecells.config

"""
# Run configuration

A `RunConfig` holds everything a command needs. It can be written to and
read back from JSON, so a run can be repeated with `--config path`; flags
given on the command line take precedence over the file.

```python
cfg = RunConfig()
cfg.setCommand("induce")
cfg.setN(4)
cfg.setComposition([2, 2])
cfg.setCellOf(Permutation.parse("2,1,3,4"))
cfg.validate()
```
"""

import os
from typing import List

from .symgroup import Permutation, ParabolicData
from .klcache import ENV_CACHE_DIR, KLCache
from .serializable import Serializable

COMMANDS = ("kl", "cells", "cellmod", "induce", "parabolic", "filtration", "verify")
KINDS = ("sign", "permutation", "twisting")

class RunConfig(Serializable):
    command: str = ""
    n: int = 0
    composition: List[int] = None
    cell_of: Permutation = None
    cache: str = ""
    output: str = ""
    verbose: int = 0
    max_n: int = 4
    jobs: int = 1
    kind: str = "permutation"
    pair: List[Permutation] = None

    def setCommand(self, command):
        if command not in COMMANDS:
            raise ValueError("unknown command %r" % command)
        self.command = command

    def setN(self, n):
        """
        :param n: the rank of the symmetric group, at least 1
        """
        n = int(n)
        if n < 1:
            raise ValueError("n must be positive: %d" % n)
        self.n = n

    def setComposition(self, composition):
        """
        :param composition: block sizes as a list or the text "i1,i2,..."
        """
        if isinstance(composition, str):
            composition = [int(c) for c in composition.split(",") if c.strip()]
        composition = [int(c) for c in composition]
        if any(c < 1 for c in composition):
            raise ValueError("composition entries must be positive: %s" % composition)
        self.composition = composition

    def setCellOf(self, w):
        """
        :param w: a Permutation or its comma separated one-line notation
        """
        if isinstance(w, str):
            w = Permutation.parse(w)
        self.cell_of = w

    def setCache(self, path):
        self.cache = path or ""

    def setOutput(self, path):
        self.output = path or ""

    def setVerbose(self, verbose):
        self.verbose = max(0, int(verbose))

    def setMaxN(self, max_n):
        max_n = int(max_n)
        if max_n < 1:
            raise ValueError("--max-n must be positive: %d" % max_n)
        self.max_n = max_n

    def setJobs(self, jobs):
        jobs = int(jobs)
        if jobs < 1:
            raise ValueError("--jobs must be positive: %d" % jobs)
        self.jobs = jobs

    def setKind(self, kind):
        if kind not in KINDS:
            raise ValueError("unknown module kind %r" % kind)
        self.kind = kind

    def setPair(self, y, x):
        if isinstance(y, str):
            y = Permutation.parse(y)
        if isinstance(x, str):
            x = Permutation.parse(x)
        self.pair = [y, x]

    def parabolic(self):
        """ the parabolic subgroup named by the composition, W' = W when none is given """
        if not self.composition:
            return ParabolicData.full(self.n)
        return ParabolicData(self.n, self.composition)

    def klCache(self):
        """ the KL cache, or None when neither --cache nor HECKE_CACHE_DIR names one """
        location = self.cache or os.environ.get(ENV_CACHE_DIR)
        if not location:
            return None
        return KLCache(location)

    def validate(self):
        """ :raises ValueError: when the configuration is inconsistent """
        if self.command != "verify" and self.n < 1:
            raise ValueError("n must be positive: %d" % self.n)
        if self.composition and sum(self.composition) != self.n:
            raise ValueError("composition %s does not sum to %d" % (self.composition, self.n))
        if self.cell_of is not None and self.cell_of.n != self.n:
            raise ValueError("--cell-of %s is not in S%d" % (self.cell_of, self.n))
        if self.pair:
            for w in self.pair:
                if w.n != self.n:
                    raise ValueError("--pair element %s is not in S%d" % (w, self.n))
        return self

    @staticmethod
    def fromArgs(args, base=None):
        """ a configuration from parsed arguments; values given on the command line win

        :param base: a configuration loaded from --config, or None
        """
        cfg = base if base is not None else RunConfig()
        if getattr(args, "command", None):
            cfg.setCommand(args.command)
        if getattr(args, "n", None) is not None:
            cfg.setN(args.n)
        if getattr(args, "composition", None):
            cfg.setComposition(args.composition)
        if getattr(args, "cell_of", None):
            cfg.setCellOf(args.cell_of)
        if getattr(args, "cache", None):
            cfg.setCache(args.cache)
        if getattr(args, "json", None):
            cfg.setOutput(args.json)
        if getattr(args, "verbose", 0):
            cfg.setVerbose(args.verbose)
        if getattr(args, "max_n", None) is not None:
            cfg.setMaxN(args.max_n)
        if getattr(args, "jobs", None) is not None:
            cfg.setJobs(args.jobs)
        if getattr(args, "kind", None):
            cfg.setKind(args.kind)
        if getattr(args, "pair", None):
            cfg.setPair(*args.pair)
        return cfg
