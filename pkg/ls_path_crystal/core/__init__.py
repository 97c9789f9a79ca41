from . import errors, logger, utils, worker
