import logging
import sys

from vcloud.vcloud_mpc.utils.settings import get_log_level

_ROOT = "vcloud"
_configured = False


def logger(module: str | None = None) -> logging.Logger:
    """
    Namespaced application logger, configured on first use

    :param module: optional sub-namespace, e.g. ``"garbler"``
    :type module: str | None
    :return: logger under the ``vcloud`` namespace
    :rtype: logging.Logger
    """
    global _configured
    if not _configured:
        root = logging.getLogger(_ROOT)
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s %(message)s"))
        root.addHandler(handler)
        root.setLevel(get_log_level().upper())
        root.propagate = False
        _configured = True
    return logging.getLogger(f"{_ROOT}.{module}" if module else _ROOT)
