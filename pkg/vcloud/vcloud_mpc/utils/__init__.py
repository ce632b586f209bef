import importlib


def get_attr(method_string: str):
    """Resolve a dotted path such as ``pkg.module.name`` to the object it names"""
    module_name, _, attr = method_string.rpartition(".")
    return getattr(importlib.import_module(module_name), attr)
