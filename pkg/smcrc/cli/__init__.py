#  Copyright (c) 2026 smcrc developers. See LICENSE

from .driver import Cli, build_parser, commands
