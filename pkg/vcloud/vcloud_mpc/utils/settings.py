import json
import os
from functools import lru_cache

VCLOUD_SITE_CONFIG_ENV = "VCLOUD_SITE_CONFIG"

VCLOUD_DEFAULT_N = "vcloud_default_n"
VCLOUD_DEFAULT_K = "vcloud_default_k"
VCLOUD_MODULUS_BITS = "vcloud_modulus_bits"
VCLOUD_GROUP_PROFILE = "vcloud_group_profile"
VCLOUD_STEP_BOUND = "vcloud_step_bound"
VCLOUD_RECV_TIMEOUT_SECONDS = "vcloud_recv_timeout_seconds"
VCLOUD_PRIME_RETRIES = "vcloud_prime_retries"
VCLOUD_LOG_LEVEL = "vcloud_log_level"


@lru_cache(maxsize=1)
def get_conf() -> dict:
    """Site config read from the JSON file named by VCLOUD_SITE_CONFIG, empty when unset"""
    path = os.environ.get(VCLOUD_SITE_CONFIG_ENV)
    if not path:
        return {}
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def clear_conf_cache() -> None:
    get_conf.cache_clear()


def get_default_n() -> int:
    return get_conf().get(VCLOUD_DEFAULT_N, 3)


def get_default_k() -> int:
    return get_conf().get(VCLOUD_DEFAULT_K, 8)


def get_modulus_bits() -> int:
    return get_conf().get(VCLOUD_MODULUS_BITS, 128)


def get_group_profile() -> str:
    return get_conf().get(VCLOUD_GROUP_PROFILE, "test")


def get_step_bound() -> int:
    return get_conf().get(VCLOUD_STEP_BOUND, 50_000_000)


def get_recv_timeout_seconds() -> float:
    return get_conf().get(VCLOUD_RECV_TIMEOUT_SECONDS, 60.0)


def get_prime_retries() -> int:
    return get_conf().get(VCLOUD_PRIME_RETRIES, 500)


def get_log_level() -> str:
    return get_conf().get(VCLOUD_LOG_LEVEL, "WARNING")
