"""
Vertex-count guards for the expensive operations, overridable by the
environment variable ETF_RANK3_MAX_VERTICES (an integer that replaces
every default bound when set).
"""

import os

ENV_VAR = "ETF_RANK3_MAX_VERTICES"


def effective_bound(default):
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw == "":
        return default
    n = int(raw)
    assert n > 0
    return n
