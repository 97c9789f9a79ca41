import logging

from ls_path_crystal import core


def test_logger():
    l = core.logger.init_logger()
    assert (l is not None) == True


def test_logger_installs_one_handler():
    core.logger.init_logger()
    l = core.logger.init_logger(logging.DEBUG)
    handlers = [h for h in l.handlers if getattr(h, "_ls_crystal_handler", False)]
    assert len(handlers) == 1
    assert l.level == logging.DEBUG
    l.setLevel(logging.INFO)
