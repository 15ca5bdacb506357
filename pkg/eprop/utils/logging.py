# -*- coding: utf-8 -*-
import logging

logger = logging.getLogger()

LOG_FORMAT = "[%(asctime)s %(levelname)s] %(message)s"


def init_logger(log_file=None, log_file_level=logging.NOTSET, verbose=False):
    """Route the root logger to the console and, optionally, a file.

    Diagnostics log one line per profile and per decomposition level at
    INFO; per-step details (pivots, n-searches) go to DEBUG and only show
    with ``verbose``.

    Args:
        log_file (str): path of the log file, empty or None for console only.
        log_file_level (int or str): level of the file handler, either a
            ``logging`` constant or its name.
        verbose (bool): lower the console level to DEBUG.

    Returns:
        logging.Logger: the configured root logger.
    """
    if isinstance(log_file_level, str):
        log_file_level = logging.getLevelName(log_file_level.upper()) \
            if not log_file_level.isdigit() else int(log_file_level)
    log_format = logging.Formatter(LOG_FORMAT)
    root = logging.getLogger()
    root.setLevel(logging.DEBUG if verbose else logging.INFO)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(log_format)
    root.handlers = [console_handler]

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(log_file_level)
        file_handler.setFormatter(log_format)
        root.addHandler(file_handler)

    return root
