"""Pure-Python search kernel (fallback for the compiled ``_kernel``).

Both kernels must agree exactly, including the ``used`` count.
"""

EXHAUSTED, FOUND, DONE = 0, 1, 2

NOT, AND, OR, IMP, IFF, FALSE, TRUE = -1, -2, -3, -4, -5, -6, -7


def evaluate(code, start, end, vals):
    stack = []
    push = stack.append
    pop = stack.pop
    for pc in range(start, end):
        op = code[pc]
        if op >= 0:
            push(vals[op])
        elif op == NOT:
            push(not pop())
        elif op == AND:
            b = pop()
            push(pop() and b)
        elif op == OR:
            b = pop()
            push(pop() or b)
        elif op == IMP:
            b = pop()
            push((not pop()) or b)
        elif op == IFF:
            b = pop()
            push(bool(pop()) == bool(b))
        elif op == FALSE:
            push(False)
        elif op == TRUE:
            push(True)
        else:
            raise ValueError(f"bad opcode {op}")
    return bool(stack[-1])


def search(k, code, starts, ends, level_ptr, level_progs, min_trigger, find, budget, collect=False):
    """Depth-first search over the undetermined cells.

    Cells are decided from index ``k - 1`` down to 0, value 0 (out) before
    1 (in), which visits expansions in increasing enumeration index. A node
    is terminal when one of its newly decidable programs is false (pruned)
    or when every program has been checked (success); each terminal node
    costs one unit of ``budget``.

    Returns ``(status, used, total, vals, nodes)``: ``total`` is the number
    of satisfying expansions found, ``vals`` the witness cell values when
    ``status == FOUND`` and ``nodes`` the success nodes as ``(c, bytes of
    cells c..k-1)`` when ``collect`` is set.
    """
    vals = bytearray(k)
    used = 0
    total = 0
    nodes = []
    c = k
    while True:
        ok = True
        for j in range(level_ptr[c], level_ptr[c + 1]):
            p = level_progs[j]
            if not evaluate(code, starts[p], ends[p], vals):
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
                return FOUND, used, 1, bytes(vals), nodes
            total += 1 << c
            if collect:
                nodes.append((c, bytes(vals[c:])))
        while True:
            if c == k:
                return DONE, used, total, None, nodes
            if vals[c] == 0:
                vals[c] = 1
                break
            c += 1
