"""Multivariable link invariants from type-I Lie superalgebras.

Thin convenience layer over the compiled core: algebra/root data, atypical
parameter sets, the clearing factors M0/M1, the pairing S', the normalized
Hopf pairing, and the full braid-closure invariant pipeline.
"""

import json as _json

from ._core import (
    atypical_values,
    dhat_strings,
    hopf_string,
    invariant_json,
    root_data_json,
    run_cli,
    selfcheck,
    sprime_string,
)

__all__ = [
    "atypical_values",
    "dhat_strings",
    "hopf_string",
    "invariant",
    "invariant_json",
    "root_data",
    "root_data_json",
    "run_cli",
    "selfcheck",
    "sprime_string",
]


def root_data(family, m, n):
    """Root data of sl(m|n) or osp(2|2n), as a dict."""
    return _json.loads(root_data_json(family, m, n))


def invariant(link):
    """Normalized invariant of a colored braid closure.

    `link` is a dict (or JSON string) in the link format:
    {"strands": 2, "word": ["s1", "s1"], "colors": {"1": {...}, ...}}.
    Returns the result as a dict.
    """
    text = link if isinstance(link, str) else _json.dumps(link)
    return _json.loads(invariant_json(text))
