#  Copyright (c) 2026 smcrc developers. See LICENSE
