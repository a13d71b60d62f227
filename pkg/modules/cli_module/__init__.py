"""
命令行模块
"""

from .cli_module import (
    COMMANDS,
    CommandFailed,
    build_parser,
    load_output_schema,
    main,
    parse_int_list,
    parse_int_range,
    parse_token_list,
    render_json,
)

__version__ = "1.0.0"
__all__ = [
    "COMMANDS",
    "CommandFailed",
    "build_parser",
    "load_output_schema",
    "main",
    "parse_int_list",
    "parse_int_range",
    "parse_token_list",
    "render_json",
]
