"""Numpy implementation of the enumeration kernel, used when the extension is absent."""

import numpy as np

OP_VAR, OP_TABLE, OP_MUL, OP_COMM = 0, 1, 2, 3

CHUNK = 1 << 18


def count_values(mul, inv, tables, program, nvars, start, stop, counts):
    n = mul.shape[0]
    if stop <= start:
        return
    if nvars < 1 or len(program) < 1:
        raise ValueError("empty program")
    places = n ** np.arange(nvars - 1, -1, -1, dtype=object)
    for lo in range(start, stop, CHUNK):
        hi = min(stop, lo + CHUNK)
        t = np.arange(lo, hi, dtype=np.int64)
        digits = [(t // int(p)) % n for p in places]
        stack = []
        for op, arg in program:
            if op == OP_VAR:
                stack.append(digits[arg])
            elif op == OP_TABLE:
                stack[-1] = tables[arg][stack[-1]]
            elif op == OP_MUL:
                b = stack.pop()
                stack[-1] = mul[stack[-1], b]
            else:
                b = stack.pop()
                a = stack[-1]
                stack[-1] = mul[mul[inv[a], inv[b]], mul[a, b]]
        counts += np.bincount(stack[0], minlength=n)
