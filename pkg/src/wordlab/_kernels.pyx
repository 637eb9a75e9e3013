# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernel.  Must agree bit for bit with ``_fallback``."""

from libc.stdint cimport int32_t, int64_t
from libc.stdlib cimport free, malloc

cdef enum:
    OP_VAR = 0
    OP_TABLE = 1
    OP_MUL = 2
    OP_COMM = 3


def count_values(const int32_t[:, ::1] mul, const int32_t[::1] inv,
                 const int32_t[:, ::1] tables, const int32_t[:, ::1] program,
                 int nvars, int64_t start, int64_t stop, int64_t[::1] counts):
    """Add, for each assignment index in ``[start, stop)``, one to the count of its value.

    Assignment ``t`` binds variable ``j`` to digit ``j`` of ``t`` written in
    base ``|G|`` (variable 0 most significant).
    """
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t length = program.shape[0]
    cdef int64_t t, rest
    cdef Py_ssize_t pc, sp, j
    cdef int32_t op, arg, a, b
    if stop <= start:
        return
    if nvars < 1 or length < 1:
        raise ValueError("empty program")
    cdef int32_t* digits = <int32_t*>malloc(nvars * sizeof(int32_t))
    cdef int32_t* stack = <int32_t*>malloc(length * sizeof(int32_t))
    if digits == NULL or stack == NULL:
        free(digits)
        free(stack)
        raise MemoryError()
    rest = start
    for j in range(nvars - 1, -1, -1):
        digits[j] = <int32_t>(rest % n)
        rest //= n
    try:
        with nogil:
            for t in range(start, stop):
                sp = 0
                for pc in range(length):
                    op = program[pc, 0]
                    arg = program[pc, 1]
                    if op == OP_VAR:
                        stack[sp] = digits[arg]
                        sp += 1
                    elif op == OP_TABLE:
                        stack[sp - 1] = tables[arg, stack[sp - 1]]
                    elif op == OP_MUL:
                        sp -= 1
                        stack[sp - 1] = mul[stack[sp - 1], stack[sp]]
                    else:
                        sp -= 1
                        a = stack[sp - 1]
                        b = stack[sp]
                        stack[sp - 1] = mul[mul[inv[a], inv[b]], mul[a, b]]
                counts[stack[0]] += 1
                j = nvars - 1
                while j >= 0:
                    digits[j] += 1
                    if digits[j] < n:
                        break
                    digits[j] = 0
                    j -= 1
    finally:
        free(digits)
        free(stack)
