"""Hide p message bits per n-bit cover block with at most rho flips.

One block: the carrier t stays unchanged when the message m already
equals the check of t (syndrome s = m XOR H(t) is zero); otherwise the
coset leader of s is XORed in, flipping at most rho positions.  The
receiver recovers m as H(v) with no table at all.

A byte stream is framed before embedding: a 32-bit big-endian bit
count, the payload bits MSB-first within each byte, then zero padding
up to a multiple of p.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .decoder import CosetTable
from .gf2 import as_bits, mat_vec_mul, syndrome_index, vec_add, weight
from .graphs import GraphicalCode

HEADER_BITS = 32


class CapacityError(ValueError):
    """Raised when the cover has too few bits for the framed payload."""


class FrameError(ValueError):
    """Raised when a recovered stream does not parse as a framed payload."""


@dataclass(frozen=True)
class EmbedReport:
    """What one embedding run did to the cover.

    ``empirical_efficiency`` counts all conveyed frame bits (header and
    padding included): p * blocks_used / total_flips, inf if nothing
    flipped.
    """

    blocks_used: int
    total_flips: int
    max_flips_per_block: int
    embedding_rate: float
    theoretical_efficiency: float
    empirical_efficiency: float


def embed_block(t, m, table: CosetTable) -> tuple[np.ndarray, int]:
    """Embed p message bits into one n-bit block.

    Returns:
        (modified block v with H(v) = m, number of bits flipped).
    """
    code = table.code
    t = as_bits(t)
    m = as_bits(m)
    p = code.n_len - code.k
    if t.size != code.n_len:
        raise ValueError(f"block must have {code.n_len} bits, got {t.size}")
    if m.size != p:
        raise ValueError(f"message must have {p} bits, got {m.size}")
    s = vec_add(m, mat_vec_mul(code.parity_check, t))
    leader = table.leaders[syndrome_index(s)]
    return t ^ leader, weight(leader)


def extract_block(v, code: GraphicalCode) -> np.ndarray:
    """Recover the p message bits of one block: m = H(v)."""
    v = as_bits(v)
    if v.size != code.n_len:
        raise ValueError(f"block must have {code.n_len} bits, got {v.size}")
    return mat_vec_mul(code.parity_check, v)


def bytes_to_bits(data: bytes) -> np.ndarray:
    """Bytes -> bit vector, MSB first within each byte."""
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8))


def bits_to_bytes(bits) -> bytes:
    """Inverse of :func:`bytes_to_bits`; length must be a multiple of 8."""
    bits = as_bits(bits)
    if bits.size % 8:
        raise ValueError(f"bit length {bits.size} is not a multiple of 8")
    return np.packbits(bits).tobytes()


def frame_payload(data_bits, p: int) -> np.ndarray:
    """Prefix a 32-bit length header and zero-pad to a multiple of p."""
    data_bits = as_bits(data_bits)
    if p < 1:
        raise ValueError(f"block message size must be positive, got {p}")
    if data_bits.size >= 1 << HEADER_BITS:
        raise ValueError("payload too long for a 32-bit length header")
    header = np.unpackbits(
        np.frombuffer(struct.pack(">I", data_bits.size), dtype=np.uint8)
    )
    pad = -(HEADER_BITS + data_bits.size) % p
    return np.concatenate([header, data_bits, np.zeros(pad, dtype=np.uint8)])


def unframe_payload(framed) -> np.ndarray:
    """Strip header and padding; validates the declared length.

    Raises:
        FrameError: if the stream is shorter than the header, or the
            header claims more bits than are present.
    """
    framed = as_bits(framed)
    if framed.size < HEADER_BITS:
        raise FrameError(f"frame has {framed.size} bits, header needs {HEADER_BITS}")
    declared = int.from_bytes(np.packbits(framed[:HEADER_BITS]).tobytes(), "big")
    if declared > framed.size - HEADER_BITS:
        raise FrameError(
            f"header declares {declared} payload bits, only "
            f"{framed.size - HEADER_BITS} present"
        )
    return framed[HEADER_BITS : HEADER_BITS + declared].copy()


def _block_syndromes(blocks: np.ndarray, code: GraphicalCode) -> np.ndarray:
    """Check bits of each row of an (N, n) block matrix, as an (N, p) matrix."""
    return (blocks.astype(np.int64) @ code.parity_check.T.astype(np.int64) & 1).astype(np.uint8)


def embed_stream(cover_bits, data_bits, table: CosetTable) -> tuple[np.ndarray, EmbedReport]:
    """Frame ``data_bits`` and embed them across leading cover blocks.

    Trailing cover bits that no block reaches pass through unchanged.

    Raises:
        CapacityError: if the framed payload needs more blocks than the
            cover holds.
    """
    code = table.code
    cover_bits = as_bits(cover_bits)
    n = code.n_len
    p = n - code.k
    framed = frame_payload(data_bits, p)
    chunks = framed.reshape(-1, p)
    needed = chunks.shape[0] * n
    if needed > cover_bits.size:
        raise CapacityError(
            f"framed payload needs {needed} cover bits, only {cover_bits.size} available"
        )
    blocks = cover_bits[:needed].reshape(-1, n)
    syndromes = chunks ^ _block_syndromes(blocks, code)
    place = 1 << np.arange(p - 1, -1, -1, dtype=np.int64)
    indices = syndromes.astype(np.int64) @ place
    flips = table.leaders[indices]
    stego = np.concatenate([(blocks ^ flips).reshape(-1), cover_bits[needed:]])
    per_block = flips.sum(axis=1, dtype=np.int64)
    total = int(per_block.sum())
    report = EmbedReport(
        blocks_used=chunks.shape[0],
        total_flips=total,
        max_flips_per_block=int(per_block.max()),
        embedding_rate=p / n,
        theoretical_efficiency=p / table.rho,
        empirical_efficiency=(p * chunks.shape[0] / total) if total else float("inf"),
    )
    return stego, report


def extract_stream(stego_bits, code: GraphicalCode) -> np.ndarray:
    """Recover the framed payload from the leading stego blocks.

    Reads just enough blocks for the header, then exactly as many as
    the declared length requires.

    Raises:
        FrameError: if the stream is too short for the header or for
            the length the header declares.
    """
    stego_bits = as_bits(stego_bits)
    n = code.n_len
    p = n - code.k
    header_blocks = -(-HEADER_BITS // p)
    if stego_bits.size < header_blocks * n:
        raise FrameError(
            f"stego stream has {stego_bits.size} bits, header needs {header_blocks * n}"
        )
    head = _block_syndromes(
        stego_bits[: header_blocks * n].reshape(-1, n), code
    ).reshape(-1)[:HEADER_BITS]
    declared = int.from_bytes(np.packbits(head).tobytes(), "big")
    total_blocks = -(-(HEADER_BITS + declared) // p)
    if stego_bits.size < total_blocks * n:
        raise FrameError(
            f"header declares {declared} payload bits needing {total_blocks * n} "
            f"stego bits, only {stego_bits.size} present"
        )
    framed = _block_syndromes(
        stego_bits[: total_blocks * n].reshape(-1, n), code
    ).reshape(-1)
    return unframe_payload(framed)


def compute_metrics(n_len: int, p: int, rho: int) -> tuple[float, float]:
    """(embedding rate p/n, embedding efficiency p/rho), as exact floats.

    Raises:
        ValueError: unless all three arguments are positive (a covering
            radius of 0 leaves efficiency undefined).
    """
    if n_len < 1 or p < 1 or rho < 1:
        raise ValueError(
            f"n={n_len}, p={p}, rho={rho}: all must be positive"
        )
    return p / n_len, p / rho
