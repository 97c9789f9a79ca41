import logging

kLogFormat = '%(asctime)s - %(filename)s[line:%(lineno)d] - %(levelname)s: %(message)s'


def init_logger(level: int = logging.INFO):
    logger = logging.getLogger()
    logger.setLevel(level)

    for handler in logger.handlers:
        if getattr(handler, "_ls_crystal_handler", False):
            return logger

    formatter = logging.Formatter(kLogFormat)

    consoleHandler = logging.StreamHandler()
    consoleHandler.setFormatter(formatter)
    consoleHandler._ls_crystal_handler = True
    logger.addHandler(consoleHandler)

    return logger
