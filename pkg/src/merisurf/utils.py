import importlib
import logging
import os.path
import sys

from . import defaultconfig

LOG_FORMAT = '%(asctime)s - [%(levelname)s] - [%(name)s] - %(message)s'


def load_module(path):
    path = os.path.abspath(path)
    path, _ = path.rsplit('.', 1)
    directory, module = path.rsplit(os.sep, 1)
    sys.path.insert(0, directory)
    try:
        mod = importlib.import_module(module)
    finally:
        sys.path.remove(directory)
    return mod, directory


def load_settings(path):
    mod, _ = load_module(path)
    return mod


def setting(settings, name):
    """Look ``name`` up on a settings module, falling back to the defaults."""
    if settings is not None and hasattr(settings, name):
        return getattr(settings, name)
    return getattr(defaultconfig, name)


def get_logger(name='merisurf', settings=None):
    logger = logging.getLogger(name)
    if str(setting(settings, 'log_level')).lower() == 'debug':
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(logging.INFO)

    if not logger.handlers:
        ch = logging.StreamHandler()
        ch.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(ch)
    return logger
