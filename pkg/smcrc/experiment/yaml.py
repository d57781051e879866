"""Load the raw YAML of experiment configuration files"""

#  Copyright (c) 2026 smcrc developers. See LICENSE

from io import StringIO

from ruamel.yaml import YAML
from ruamel.yaml.parser import ParserError
from ruamel.yaml.scanner import ScannerError
from ruamel.yaml.composer import ComposerError
from ruamel.yaml.constructor import ConstructorError

from ..core.errors import ConfigError

import logging
logger = logging.getLogger(__name__)

fast_load = YAML(typ='safe')
fast_load.indent(mapping=2, sequence=4, offset=2)
fast_load.default_flow_style = False


def load_yaml(text: str, source: str = "<config>") -> dict:
    try:
        node = fast_load.load(text)
    except (ParserError, ScannerError, ComposerError, ConstructorError) as e:
        mark = e.problem_mark
        raise ConfigError(
            f"{source}: {e.problem}",
            line=None if mark is None else mark.line,
            column=None if mark is None else mark.column)

    if node is None:
        return {}
    if not isinstance(node, dict):
        raise ConfigError(f"{source}: expected a mapping at the top level")
    return node


def yaml_to_string(v: dict) -> str:
    s = StringIO()
    fast_load.dump(v, s)
    return s.getvalue()
