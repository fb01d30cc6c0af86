"""Seeded random word pool with rejection sampling.

The pool serves uniform draws from {1..k} out of a stream of fixed-width
words. Two word sources are supported:

* ``full`` — fully independent words from splitmix64, a fixed, documented
  64-bit generator (Steele, Lea & Flood's finalizer). The stream depends
  only on the seed, so runs are bit-reproducible on any platform.
* ``dwise`` — d-wise independent words: a random polynomial of degree d-1
  over GF(p) (p = smallest prime >= 2^w, w = word width) evaluated at
  0, 1, 2, ...; values >= 2^w are rejected at generation time so the word
  stream stays w bits wide.

Draws use standard rejection sampling: mask the next word down to
ceil(log2 k) bits, accept b < k as b+1, otherwise move to the next word.
Acceptance probability is at least 1/2, so a draw consumes at most two
words in expectation.

Pools auto-extend instead of failing when a caller outruns the initial
sizing; in dwise mode the extension evaluates the same polynomial at
further points, so the O(log n) seed-bits accounting applies to the
initial budget only. The pool reports total words consumed.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_CHUNK = 4096


def mix64(x: int) -> int:
    """splitmix64 output function: bijective mixing of a 64-bit value."""
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _mix64_vec(x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return x ^ (x >> np.uint64(31))


def splitmix64(seed: int, count: int) -> np.ndarray:
    """First `count` outputs of splitmix64 seeded with `seed`, as uint64."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        states = np.uint64(seed & _MASK64) + idx * np.uint64(_GAMMA)
    return _mix64_vec(states)


def derive_seed(seed: int, index: int) -> int:
    """Deterministic child seed for window/trial number `index`."""
    return mix64((seed & _MASK64) ^ mix64(index + 1))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    if n <= 2:
        return 2
    n |= 1
    while not is_prime(n):
        n += 2
    return n


def gen_dwise(seed: int, count: int, prime: int, d: int, coeffs=None) -> list[int]:
    """Evaluate a random degree-(d-1) polynomial over GF(prime) at 0..count-1.

    The d coefficients (listed highest degree first) are drawn uniformly from
    GF(prime) via rejection sampling on the splitmix64 stream, or can be
    forced through `coeffs` for testing. Any d of the returned values are
    jointly uniform.
    """
    if not is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if d < 2 or d % 2 != 0:
        raise ValueError(f"d must be an even integer >= 2, got {d}")
    if count < 1:
        raise ValueError("count must be >= 1")
    if coeffs is None:
        coeffs = _draw_field_elements(seed, prime, d)
    else:
        coeffs = [int(c) % prime for c in coeffs]
        if len(coeffs) != d:
            raise ValueError(f"expected {d} coefficients, got {len(coeffs)}")
    out = []
    for x in range(count):
        acc = 0
        for c in coeffs:
            acc = (acc * x + c) % prime
        out.append(acc)
    return out


def _draw_field_elements(seed: int, prime: int, count: int) -> list[int]:
    bits = max(1, (prime - 1).bit_length())
    mask = (1 << bits) - 1
    vals = []
    state = seed & _MASK64
    while len(vals) < count:
        state = (state + _GAMMA) & _MASK64
        v = mix64(state) & mask
        if v < prime:
            vals.append(v)
    return vals


class RandomPool:
    """Stream of fixed-width random words plus rejection-sampling draws.

    Construct through `create_pool`. The word stream is fully determined by
    (seed, mode, word_bits); `words_used` counts consumed words.
    """

    def __init__(self, seed: int, word_bits: int, mode: str, d: int = 8):
        if mode not in ("full", "dwise"):
            raise ValueError(f"unknown pool mode {mode!r}")
        self.seed = int(seed) & _MASK64
        self.word_bits = word_bits
        self.mode = mode
        self.d = d
        self.words_used = 0
        self._buf = np.empty(0, dtype=np.int64)
        self._pos = 0
        self._word_mask = (1 << word_bits) - 1
        if mode == "full":
            self._next_index = 0
        else:
            if d < 2 or d % 2 != 0:
                raise ValueError(f"dwise mode needs an even d >= 2, got {d}")
            self.prime = next_prime(1 << word_bits)
            self._coeffs = _draw_field_elements(self.seed, self.prime, d)
            self._next_x = 0

    # -- word stream ----------------------------------------------------

    def _refill(self, want: int) -> None:
        have = len(self._buf) - self._pos
        pending = [self._buf[self._pos:]] if have else []
        while have < want:
            if self.mode == "full":
                idx = np.arange(self._next_index + 1, self._next_index + _CHUNK + 1, dtype=np.uint64)
                with np.errstate(over="ignore"):
                    states = np.uint64(self.seed) + idx * np.uint64(_GAMMA)
                raw = _mix64_vec(states)
                self._next_index += _CHUNK
                words = (raw & np.uint64(self._word_mask)).astype(np.int64)
            else:
                xs = np.arange(self._next_x, self._next_x + _CHUNK, dtype=np.int64)
                self._next_x += _CHUNK
                acc = np.zeros(len(xs), dtype=np.int64)
                p = self.prime
                if p <= (1 << 31):
                    for c in self._coeffs:
                        acc = (acc * xs + c) % p
                else:
                    acc = np.array(
                        [self._eval_poly(int(x)) for x in xs], dtype=np.int64
                    )
                words = acc[acc <= self._word_mask]
            pending.append(words)
            have += len(words)
        self._buf = np.concatenate(pending) if pending else np.empty(0, dtype=np.int64)
        self._pos = 0

    def _eval_poly(self, x: int) -> int:
        acc = 0
        for c in self._coeffs:
            acc = (acc * x + c) % self.prime
        return acc

    def next_word(self) -> int:
        if self._pos >= len(self._buf):
            self._refill(1)
        w = int(self._buf[self._pos])
        self._pos += 1
        self.words_used += 1
        return w

    def take_words(self, count: int) -> np.ndarray:
        if len(self._buf) - self._pos < count:
            self._refill(count)
        out = self._buf[self._pos : self._pos + count]
        self._pos += count
        self.words_used += count
        return out

    # -- uniform draws ---------------------------------------------------

    def uniform(self, k: int) -> int:
        """One draw from {1..k}: mask next word to ceil(log2 k) bits, reject >= k."""
        if not 1 <= k <= (1 << self.word_bits):
            raise ValueError(f"k={k} outside 1..2^{self.word_bits}")
        mask = (1 << (k - 1).bit_length()) - 1 if k > 1 else 0
        while True:
            b = self.next_word() & mask
            if b < k:
                return b + 1

    def uniform_many(self, k: int, count: int) -> np.ndarray:
        """`count` draws from {1..k}; consumes words exactly like `uniform`."""
        if not 1 <= k <= (1 << self.word_bits):
            raise ValueError(f"k={k} outside 1..2^{self.word_bits}")
        if count == 0:
            return np.empty(0, dtype=np.int64)
        mask = (1 << (k - 1).bit_length()) - 1 if k > 1 else 0
        out = np.empty(count, dtype=np.int64)
        filled = 0
        while filled < count:
            need = count - filled
            # Acceptance rate is >= 1/2; grab a margined block, keep accepted
            # values in stream order, and push unconsumed words back.
            grab = max(16, int(need * 2.2) + 8)
            if len(self._buf) - self._pos < grab:
                self._refill(grab)
            block = self._buf[self._pos : self._pos + grab]
            vals = block & mask
            ok = vals < k
            hits = np.flatnonzero(ok)
            if len(hits) >= need:
                last = hits[need - 1]
                out[filled:count] = vals[hits[:need]]
                self._pos += int(last) + 1
                self.words_used += int(last) + 1
                filled = count
            else:
                out[filled : filled + len(hits)] = vals[hits]
                filled += len(hits)
                self._pos += grab
                self.words_used += grab
        return out + 1


def create_pool(seed: int, max_k: int, mode: str = "full", d: int = 8) -> RandomPool:
    """Pool sized for draws up to `max_k`: word width ceil(log2 max_k), min 1."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    word_bits = max(1, (max_k - 1).bit_length())
    return RandomPool(seed, word_bits, mode, d)


def rand_uniform(pool: RandomPool, k: int) -> int:
    """Uniform integer in {1..k} by rejection sampling from the pool."""
    return pool.uniform(k)
