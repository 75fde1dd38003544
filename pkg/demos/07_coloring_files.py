"""Write and read GCOL1 colouring files.

Run: python demos/07_coloring_files.py
"""

import tempfile
from pathlib import Path

from goodcolor import build_affine_coloring
from goodcolor.gcol import InvalidLabelIndexError, decode_bytes, encode_bytes, payload_size

c = build_affine_coloring(5)
data = encode_bytes(c)
print(f"K{c.N} with {len(c.labels)} labels -> {len(data)} bytes "
      f"(payload {payload_size(c.N)})")
print("header:", data[:10])
print("roundtrip identical:", decode_bytes(data).same_as(c))

print("3432-vertex colouring payload:", payload_size(3432), "bytes")

# Corrupt one nibble to an out-of-range label.
bad = bytearray(data)
bad[-1] = 0xFF
try:
    decode_bytes(bytes(bad))
except InvalidLabelIndexError as exc:
    print("rejected:", exc)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "ag5.gcol"
    path.write_bytes(data)
    print("file size on disk:", path.stat().st_size)
