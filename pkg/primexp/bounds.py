"""
Closed-form exponent bounds and predictions.

These are pure evaluators: they compute what a bound or formula predicts and
validate its parameters. Comparing predictions with computed exponents is
the job of :mod:`primexp.verification`.
"""
from fractions import Fraction
from math import gcd

from .errors import ParameterError


def _require(condition, message, *args):
    if not condition:
        raise ParameterError(message.format(*args))


def chord_limit(n, g):
    """t = min(n-g+1, g), the largest chord index of the D_{g,N} family."""
    return min(n - g + 1, g)


def lemma23_bound(n, g):
    """exp <= n + g(n-2) for a primitive digraph of order n and girth g."""
    _require(n >= 2, 'order n={0} must be >= 2', n)
    _require(1 <= g <= n - 1, 'girth g={0} outside 1..{1}', g, n - 1)
    return n + g * (n - 2)


def lemma25_bound(n):
    """exp <= floor((n-2)^2/2) + n, applicable when |C(S)| >= 3."""
    _require(n >= 2, 'order n={0} must be >= 2', n)
    return (n - 2) ** 2 // 2 + n


def lemma26_bound(n, g, q):
    """exp <= 2n - g - 1 + (g-1)(q-1) when C(S) = {g, q}."""
    _require(1 <= g <= q <= n, 'need 1 <= g <= q <= n, got g={0} q={1} n={2}', g, q, n)
    return 2 * n - g - 1 + (g - 1) * (q - 1)


def lemma32_bound(n, g):
    """exp <= 2n - 2 + (g-1)(n-3) when C(S) = {g, q} with q <= n-1."""
    _require(n >= 6, 'order n={0} must be >= 6', n)
    _require(1 <= g <= n - 2, 'girth g={0} outside 1..{1}', g, n - 2)
    return 2 * n - 2 + (g - 1) * (n - 3)


def lemma34_bound(n, g):
    """exp(H) <= (n-1)g + n - 2g."""
    _require(g >= 1, 'girth g={0} must be >= 1', g)
    _require(n >= 2 * g, 'need n >= 2g, got n={0} g={1}', n, g)
    _require(gcd(n, g) == 1, 'gcd(n, g) = {0}, must be 1', gcd(n, g))
    return (n - 1) * g + n - 2 * g


def lemma34_case_bound(n, g, k):
    """Case analysis of the H bound: returns (case, claimed d(C(H)), claimed bound).

    Case 1 is the tight geometry n = 2g, k = g+1. In Case 2 the larger of
    d(v_{g+k-1}, v_1) and d(v_g, v_k) decides which pair attains d(C(H)).
    """
    lemma34_bound(n, g)
    _require(g + 1 <= k and g + k - 1 <= n, 'anchor k={0} outside {1}..{2}', k, g + 1, n - g + 1)
    back = n - g - k + 2
    across = k - g
    if back == 1 and across == 1:
        return 1, n - 1, (n - 1) * g
    if back >= across:
        return 2, 2 * n - g - k, (n - 1) * g + n - g - k + 1
    return 2, k - g - 2 + n, (n - 1) * g + k - g - 1


def formula_thm33(n, g, r):
    """Predicted exponent (n-2)g + 1 - r + n of any D_{g,N} with max(N) = r."""
    _require(1 <= g <= n - 1, 'girth g={0} outside 1..{1}', g, n - 1)
    _require(gcd(n, g) == 1, 'gcd(n, g) = {0}, must be 1', gcd(n, g))
    t = chord_limit(n, g)
    _require(1 <= r <= t, 'r={0} outside 1..t={1}', r, t)
    return (n - 2) * g + 1 - r + n


def thm33_claimed_pair(n, g, r):
    """The ordered pair claimed to attain d(C(D_{g,N})) and the claimed value."""
    formula_thm33(n, g, r)
    if r < n - g + 1:
        return (n, g + r), 2 * n - g - r
    return (n, 1), n - 1


def thm36_range(n, g):
    """Admissible exponent window (low, high]: 2n-2+(g-1)(n-3) < w <= n+g(n-2)."""
    _require(n >= 3, 'order n={0} must be >= 3', n)
    _require(1 <= g <= n - 1, 'girth g={0} outside 1..{1}', g, n - 1)
    return 2 * n - 2 + (g - 1) * (n - 3), n + g * (n - 2)


def z_of_w(n, g, w):
    """Index z = (n-2)g + 1 + n - w of the D^z class predicted for exponent w."""
    low, high = thm36_range(n, g)
    _require(low < w <= high, 'w={0} outside window ({1}, {2}]', w, low, high)
    return (n - 2) * g + 1 + n - w


def girth_threshold_stated(n):
    """Smallest integer g with g > (n^2 - 4n) / (4(n-3))."""
    _require(n >= 4, 'order n={0} must be >= 4', n)
    limit = Fraction(n * n - 4 * n, 4 * (n - 3))
    return int(limit) + 1


def proof_inequality_holds(n, g):
    """2n - 1 + (g-1)(n-3) > floor((n-2)^2/2) + n."""
    return 2 * n - 1 + (g - 1) * (n - 3) > lemma25_bound(n)


def girth_threshold_proof(n):
    """Smallest g making proof_inequality_holds(n, g) true."""
    _require(n >= 4, 'order n={0} must be >= 4', n)
    g = 1
    while not proof_inequality_holds(n, g):
        g += 1
    return g


def h_exclusion_holds(n, g):
    """(n-1)g + n - 2g < 2n - 1 + (g-1)(n-3); vacuously true when n < 2g."""
    if n < 2 * g:
        return True
    return (n - 1) * g + n - 2 * g < 2 * n - 1 + (g - 1) * (n - 3)
