"""Secure network coding toolkit: transfer-matrix compilation, wiretap
adversary simulation, anti-Latin relay analysis and hashing audits."""

from secnet._secnet import (
    ArithCtx,
    NetworkSpec,
    SecnetError,
    binary_attack_information,
    compile_addition,
    compile_model,
    compile_passive,
    compile_replacement,
    construct_pair,
    binary_relay_audit,
    make_field,
    make_ring,
    node_adversary_ranks,
    optimal_windows,
    parse_network,
    parse_network_file,
    rate_report,
    robust_failure_rate,
    search_pairs,
    toeplitz_audit,
    verify_pair,
)

__all__ = [
    "ArithCtx",
    "NetworkSpec",
    "SecnetError",
    "binary_attack_information",
    "compile_addition",
    "compile_model",
    "compile_passive",
    "compile_replacement",
    "construct_pair",
    "binary_relay_audit",
    "make_field",
    "make_ring",
    "node_adversary_ranks",
    "optimal_windows",
    "parse_network",
    "parse_network_file",
    "rate_report",
    "robust_failure_rate",
    "search_pairs",
    "toeplitz_audit",
    "verify_pair",
]
