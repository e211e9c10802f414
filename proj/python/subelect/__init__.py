"""Isomorphic subelections: solvers, samplers and experiments."""

from ._subelect import (
    Election,
    IsoWitness,
    ParseError,
    SizeLimitError,
    calibrate_mallows_phi,
    expected_swaps,
    identical_votes_stat,
    lp_text,
    parse_election,
    sample,
    similarity_matrix,
    solve,
    verify_witness,
    write_election,
)

__all__ = [
    "Election",
    "IsoWitness",
    "ParseError",
    "SizeLimitError",
    "calibrate_mallows_phi",
    "expected_swaps",
    "identical_votes_stat",
    "lp_text",
    "parse_election",
    "sample",
    "similarity_matrix",
    "solve",
    "verify_witness",
    "write_election",
]
