
"""
Logging for heckecells.

All messages go through the "heckecells" logger. The command line maps
`-v`, `-vv` and `-vvv` to the levels below:

* INFO: KL tables loaded from or saved to the cache, worker pools
* DEBUG: progress of the KL table by length layer, cell counts, induced
  module dimensions, filtration layers
* TRACE: per column and per element details, e.g. the number of nonzero
  entries in each KL column

Cache revalidation failures and modules that are not closed under the action
are logged at ERROR before the matching exception is raised.

Messages about one group or one induced module carry a scope prefix, "S5: "
for the KL table of S5 or "S4/2,2: " for a module induced from the parabolic
subgroup of composition 2,2.
"""
import os
import logging
from logging.handlers import RotatingFileHandler

LOGLEVEL_TRACE = 9
logging.addLevelName(LOGLEVEL_TRACE, "TRACE")
def trace(self, message, *args, **kws):
    if self.isEnabledFor(LOGLEVEL_TRACE):
        self._log(LOGLEVEL_TRACE, message, args, **kws)
logging.Logger.trace = trace

LOG_FORMAT = '%(asctime)-15s %(levelname)s %(filename)s:%(funcName)s():%(lineno)d:%(message)s'
FILE_FORMAT = '%(asctime)-15s %(levelname)s %(pathname)s:%(funcName)s:%(lineno)d: %(message)s'

LOG_FILE_SIZE = 1024 * 1024
LOG_FILE_BACKUPS = 5

def basicConfig(level=logging.WARNING):
    """ stderr output for the command line, at the given level """
    logging.basicConfig(format=LOG_FORMAT)
    log.setLevel(level)

def verbosityLevel(verbose):
    """ map a -v count to a logging level: WARNING, INFO, DEBUG then TRACE """
    if verbose >= 3:
        return LOGLEVEL_TRACE
    if verbose == 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING

class ScopedLogger(object):
    """ log through the heckecells logger with a scope prefix

    the scope names what is being computed, "S5" for a KL table or
    "S4/2,2" for an induced module, so that output from the workers of
    `heckecells verify --jobs N` can be told apart.
    """
    def __init__(self, scope):
        super(ScopedLogger, self).__init__()
        if scope:
            self.scope = "%s: " % scope
        else:
            self.scope = ""

    def _emit(self, level, args, kwargs):
        s, *args = args
        # stacklevel 3 reports the caller of trace(), debug(), ...
        log.log(level, self.scope + s, *args, stacklevel=3, **kwargs)

    def trace(self, *args, **kwargs):
        if log.isEnabledFor(LOGLEVEL_TRACE):
            self._emit(LOGLEVEL_TRACE, args, kwargs)

    def debug(self, *args, **kwargs):
        self._emit(logging.DEBUG, args, kwargs)

    def info(self, *args, **kwargs):
        self._emit(logging.INFO, args, kwargs)

    def warning(self, *args, **kwargs):
        self._emit(logging.WARNING, args, kwargs)

    def error(self, *args, **kwargs):
        self._emit(logging.ERROR, args, kwargs)

    def exception(self, *args, **kwargs):
        self._emit(logging.ERROR, args, dict(kwargs, exc_info=True))

def setupLogger(logger_name, log_file, level=logging.INFO):
    """ add a rotating file handler, for `--log-file`

    long verify runs at -vvv produce a lot of TRACE output, so the file
    rotates at 1 MiB and keeps five backups.
    """
    parent, _ = os.path.split(log_file)

    if parent and not os.path.exists(parent):
        os.makedirs(parent)

    l = logging.getLogger(logger_name)
    l.setLevel(level)

    handler = RotatingFileHandler(
        log_file, maxBytes=LOG_FILE_SIZE, backupCount=LOG_FILE_BACKUPS)
    handler.setFormatter(logging.Formatter(FILE_FORMAT))
    l.addHandler(handler)

    return l

log = logging.getLogger("heckecells")
hklogger = log
