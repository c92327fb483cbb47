# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel. Same contract as ``_kernel_py``."""

from libc.stdlib cimport malloc, free

cdef enum:
    OP_NOT = -1
    OP_AND = -2
    OP_OR = -3
    OP_IMP = -4
    OP_IFF = -5
    OP_FALSE = -6
    OP_TRUE = -7

EXHAUSTED, FOUND, DONE = 0, 1, 2


cdef inline int _eval(const int[:] code, int start, int end,
                      const unsigned char* vals, unsigned char* stack) except -1:
    cdef int sp = 0
    cdef int pc, op
    cdef unsigned char a, b
    for pc in range(start, end):
        op = code[pc]
        if op >= 0:
            stack[sp] = vals[op]
            sp += 1
        elif op == OP_NOT:
            stack[sp - 1] = not stack[sp - 1]
        elif op == OP_FALSE:
            stack[sp] = 0
            sp += 1
        elif op == OP_TRUE:
            stack[sp] = 1
            sp += 1
        else:
            sp -= 1
            b = stack[sp]
            a = stack[sp - 1]
            if op == OP_AND:
                stack[sp - 1] = a and b
            elif op == OP_OR:
                stack[sp - 1] = a or b
            elif op == OP_IMP:
                stack[sp - 1] = (not a) or b
            elif op == OP_IFF:
                stack[sp - 1] = (a != 0) == (b != 0)
            else:
                raise ValueError("bad opcode %d" % op)
    return stack[sp - 1] != 0


def evaluate(code, int start, int end, vals):
    cdef const int[:] c = code
    cdef bytes v = bytes(vals)
    cdef unsigned char* stack = <unsigned char*> malloc(max(end - start, 1))
    if stack == NULL:
        raise MemoryError()
    try:
        return bool(_eval(c, start, end, <const unsigned char*> v, stack))
    finally:
        free(stack)


def search(int k, code, starts, ends, level_ptr, level_progs, int min_trigger,
           bint find, long long budget, bint collect=False):
    cdef const int[:] c_code = code
    cdef const int[:] c_starts = starts
    cdef const int[:] c_ends = ends
    cdef const int[:] c_level_ptr = level_ptr
    cdef const int[:] c_level_progs = level_progs
    cdef Py_ssize_t n_code = c_code.shape[0]
    cdef unsigned char* vals = <unsigned char*> malloc(k + 1)
    cdef unsigned char* stack = <unsigned char*> malloc(n_code + 1)
    cdef long long used = 0
    cdef int c = k
    cdef int i, j, p
    cdef bint ok
    cdef object total = 0
    cdef list nodes = []
    if vals == NULL or stack == NULL:
        free(vals)
        free(stack)
        raise MemoryError()
    try:
        for i in range(k + 1):
            vals[i] = 0
        while True:
            ok = True
            for j in range(c_level_ptr[c], c_level_ptr[c + 1]):
                p = c_level_progs[j]
                if not _eval(c_code, c_starts[p], c_ends[p], vals, stack):
                    ok = False
                    break
            if ok and c > min_trigger:
                c -= 1
                vals[c] = 0
                continue
            if used >= budget:
                return EXHAUSTED, used, total, None, nodes
            used += 1
            if ok:
                if find:
                    for i in range(c):
                        vals[i] = 0
                    return FOUND, used, 1, vals[:k], nodes
                total += (<object> 1) << c
                if collect:
                    nodes.append((c, vals[c:k]))
            while True:
                if c == k:
                    return DONE, used, total, None, nodes
                if vals[c] == 0:
                    vals[c] = 1
                    break
                c += 1
    finally:
        free(vals)
        free(stack)
