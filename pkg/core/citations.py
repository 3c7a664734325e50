"""Citation tags attached to every formula value and verdict in reports.

``STATEMENTS`` maps each tag to the result it stands for; reports carry the
statements of the tags they use under ``references``.
"""

from typing import Any, Dict

MULTIPLIER_BOUND = "multiplier-bound"
ABELIAN_MULTIPLIER = "abelian-multiplier"
EVEN_HEISENBERG_MULTIPLIER = "even-heisenberg-multiplier"
ODD_HEISENBERG_MULTIPLIER = "odd-heisenberg-multiplier"
DIRECT_SUM_MULTIPLIER = "direct-sum-multiplier"
CORANK_DEFINITION = "corank-definition"
HEISENBERG_CORANK = "heisenberg-corank"
DIRECT_SUM_CORANK = "direct-sum-corank"
EXTERIOR_SQUARE_EXTENSION = "exterior-square-extension"
DIRECT_SUM_EXTERIOR_SQUARE = "direct-sum-exterior-square"
ABELIAN_CAPABILITY = "abelian-capability"
EVEN_HEISENBERG_CAPABILITY = "even-heisenberg-capability"
ODD_HEISENBERG_CAPABILITY = "odd-heisenberg-capability"
CENTRAL_QUOTIENT_CRITERION = "central-quotient-criterion"
CORANK_CLASSIFICATION = "corank-classification"
ARBITRARY_CORANK = "arbitrary-corank"
HOPF_ORACLE = "hopf-oracle"
UNRECOGNIZED = "unrecognized"

STATEMENTS: Dict[str, str] = {
    MULTIPLIER_BOUND: "dim M(L) <= ((m+n)^2 + (n-m))/2 for L of superdim (m|n), with equality only for abelian L",
    ABELIAN_MULTIPLIER: "M(A(m|n)) has superdim ((m^2 + n^2 + n - m)/2 | mn)",
    EVEN_HEISENBERG_MULTIPLIER: (
        "M(H(m,n)) has superdim (2m^2 - m + n(n+1)/2 - 1 | 2mn) for m + n >= 2, "
        "(2|0) for H(1,0) and (0|0) for H(0,1)"
    ),
    ODD_HEISENBERG_MULTIPLIER: "M(H_m) has superdim (m^2 | m^2 - 1) for m >= 2 and (1|1) for H_1",
    DIRECT_SUM_MULTIPLIER: "M(H + K) = M(H) + M(K) + H/H' (x) K/K' as superdimensions",
    CORANK_DEFINITION: "t(L) = ((m+n)^2 + (n-m))/2 - dim M(L) for L of superdim (m|n)",
    HEISENBERG_CORANK: "t(H(m,n)) = 2m + n + 1 for m + n >= 2 and t(H_m) = 2m + 2 for m >= 2",
    DIRECT_SUM_CORANK: "t(L + K) = t(L) + t(K) + dim L dim K - dim (L/L' (x) K/K')",
    EXTERIOR_SQUARE_EXTENSION: "L^L is an extension of L' by M(L), so dim L^L = dim M(L) + dim L'",
    DIRECT_SUM_EXTERIOR_SQUARE: "(H + K)^(H + K) = H^H + K^K + H/H' (x) K/K' as superdimensions",
    ABELIAN_CAPABILITY: "A(m|n) is capable except for A(1|0)",
    EVEN_HEISENBERG_CAPABILITY: "H(m,n) + A(r|s) is capable exactly when (m,n) = (1,0)",
    ODD_HEISENBERG_CAPABILITY: "H_m + A(r|s) is capable exactly when m = 1",
    CENTRAL_QUOTIENT_CRITERION: "a nilpotent L with dim L' = 1 and dim L/Z(L) > 2 is not capable",
    CORANK_CLASSIFICATION: "nilpotent Lie superalgebras with dim L' = 1 listed by corank from 0 to 4",
    ARBITRARY_CORANK: "H(1,0) + A(k-1|0) is capable and has corank k",
    HOPF_ORACLE: "M(L) = (F' n R)/[F,R], L^L = F'/[F,R] and Z*(L) computed in a free nilpotent cover",
    UNRECOGNIZED: "outside the recognized families; no closed form applies",
}

_CITING_KEYS = ("source", "justification")


def references(value: Any) -> Dict[str, str]:
    """Statements of every tag found under a ``source`` or ``justification`` key."""
    found: Dict[str, str] = {}
    if isinstance(value, dict):
        for key, item in value.items():
            if key in _CITING_KEYS and isinstance(item, str) and item in STATEMENTS:
                found[item] = STATEMENTS[item]
            else:
                found.update(references(item))
    elif isinstance(value, list):
        for item in value:
            found.update(references(item))
    return found
