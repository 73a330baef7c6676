import logging
import sys

from merisurf import defaultconfig, utils


def test_setting_falls_back_to_defaults():
    class Settings:
        tol_kappa = 1e-3

    assert utils.setting(Settings, 'tol_kappa') == 1e-3
    assert utils.setting(Settings, 'tol_ode') == defaultconfig.tol_ode
    assert utils.setting(None, 'grid') == {'nu': 41, 'nv': 41}


def test_load_settings(tmp_path):
    path = tmp_path / 'my_merisurf_settings.py'
    path.write_text("log_level = 'DEBUG'\ngrid = {'nu': 9, 'nv': 10}\n")
    settings = utils.load_settings(str(path))
    assert settings.grid == {'nu': 9, 'nv': 10}
    assert str(tmp_path) not in sys.path


def test_get_logger_level_and_handler():
    class Settings:
        log_level = 'DEBUG'

    logger = utils.get_logger(settings=Settings)
    assert logger.level == logging.DEBUG
    handlers = len(logger.handlers)
    logger = utils.get_logger()
    assert logger.level == logging.INFO
    assert len(logger.handlers) == handlers == 1
    assert logger.handlers[0].formatter._fmt == utils.LOG_FORMAT
