"""Graph codes realized as twisted first homology."""

import json as _json

from ._twistcode import *  # noqa: F401,F403
from ._twistcode import codes, graphs, report_json

__version__ = "0.1.0"


def report(instance, max_bruteforce_dim=26, workers=1):
    """Parameter report as a dict, keys in their fixed order."""
    return _json.loads(report_json(instance, max_bruteforce_dim, workers))
