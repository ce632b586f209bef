"""
Pydantic validation utilities for CLI commands
"""

import sys
from functools import wraps
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from vcloud.vcloud_mpc.utils.errors import ParameterError
from vcloud.vcloud_mpc.utils.logger import logger

T = TypeVar("T", bound=BaseModel)

USAGE_EXIT_CODE = ParameterError.exit_code


def format_validation_error(e: ValidationError) -> str:
    errors = []
    for error in e.errors():
        field = " -> ".join(str(loc) for loc in error["loc"]) or "request"
        errors.append(f"{field}: {error['msg']}")
    return "; ".join(errors)


def validate_command(schema: type[T]):
    """
    Decorator to validate parsed CLI arguments using Pydantic schemas

    Usage:
        @validate_command(DemoAdderRequest)
        def cmd_demo_adder(data: DemoAdderRequest) -> int:
            # data is now a validated Pydantic model
            ...
    """

    def decorator(f):
        @wraps(f)
        def wrapper(args, *rest):
            request_data = {key: value for key, value in vars(args).items() if value is not None}
            request_data.pop("handler", None)
            request_data.pop("command", None)

            try:
                validated_data = schema(**request_data)
            except ValidationError as e:
                error_message = format_validation_error(e)
                logger("cli").error(f"invalid arguments: {error_message}")
                print(f"error: {error_message}", file=sys.stderr)
                return USAGE_EXIT_CODE

            # exceptions from the command itself propagate to main()
            return f(validated_data, *rest)

        return wrapper

    return decorator
