"""Induced tree embeddings in prime-sum and coprime-sum graphs."""

import json

from ._core import (
    CapExceeded,
    Error,
    InputError,
    SearchBudgetExceeded,
    Tree,
    __version__,
    average_degree,
    canonical_form,
    check_bipartite_parity,
    crt_solve,
    embed,
    embed_json,
    encode_tree,
    enumerate_free_trees,
    expected_induced_path_count,
    find_induced,
    is_edge,
    is_prime,
    max_universal_m,
    next_prime_in_ap,
    parse_tree,
    random_tree,
    serialize_tree,
    verify,
)


def embed_document(tree_text, target="prime"):
    """The JSON document `primegraph embed` would print, as a dict."""
    return json.loads(embed_json(tree_text, target))
