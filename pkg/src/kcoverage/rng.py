"""Deterministic, named random streams.

All randomness in the library flows through counter-based Philox
generators keyed by ``(seed, stream id)``.  The stream ids are fixed
numbers, so a (seed, stream name) pair identifies the same sequence in
any process or platform; this is what makes scenario runs bit-for-bit
reproducible.
"""

import numpy as np

# Fixed stream ids.  Never renumber: artifact reproducibility depends on them.
STREAMS = {
    "init": 1,      # initial agent/center positions
    "jitter": 2,    # collision-resolution jitter in Lloyd-type steps
    "restart": 3,   # resampled centers after an empty-region restart
    "shuffle": 4,   # internal shuffles (e.g. min-enclosing-circle input order)
}


def stream(seed, name):
    """Return the named Philox generator for ``seed``.

    Successive calls with the same arguments restart the stream from the
    beginning.
    """
    try:
        sid = STREAMS[name]
    except KeyError:
        raise ValueError(f"unknown stream name {name!r}") from None
    key = np.array([np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(sid)])
    return np.random.Generator(np.random.Philox(key=key))
