#  Copyright (c) 2026 smcrc developers. See LICENSE

__version__ = "2026.10.19"
