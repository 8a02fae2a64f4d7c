"""Scratch: uniform-cost search for an in-place byte-op MixColumns network."""
import sys, heapq, itertools, time
sys.path.insert(0, 'src')
from qaes.gf import gf256_mul, gf256_inv

C = ((2, 3, 1, 1), (1, 2, 3, 1), (1, 1, 2, 3), (3, 1, 1, 2))
HALF = gf256_inv(2)

ADD_COST = {1: 8, 2: 11, 3: 19}
GOAL = tuple(sorted(C))


def canon(rows):
    return tuple(sorted(rows))


def search(max_cost=112, band_cap=60000):
    start = canon(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    heap = [(0, 0, start, ())]
    seen = {start: 0}
    counter = 0
    t0 = time.time()
    band_counts = {}
    while heap:
        cost, _, state, ops = heapq.heappop(heap)
        if seen.get(state, 1 << 30) < cost:
            continue
        if state == GOAL:
            return cost, ops
        if band_counts.get(cost, 0) > band_cap:
            continue
        band_counts[cost] = band_counts.get(cost, 0) + 1
        rows = state
        moves = []
        for t, s in itertools.permutations(range(4), 2):
            for f, fc in ADD_COST.items():
                nr = tuple(a ^ gf256_mul(f, b) for a, b in zip(rows[t], rows[s]))
                if nr == (0, 0, 0, 0):
                    continue
                moves.append((fc, t, nr, ("add", rows[t], rows[s], f)))
        for t in range(4):
            moves.append((3, t, tuple(gf256_mul(2, b) for b in rows[t]), ("dbl", rows[t])))
            moves.append((3, t, tuple(gf256_mul(HALF, b) for b in rows[t]), ("hlv", rows[t])))
        for fc, t, nr, op in moves:
            nc = cost + fc
            if nc > max_cost:
                continue
            nrows = list(rows)
            nrows[t] = nr
            ns = canon(nrows)
            if seen.get(ns, 1 << 30) <= nc:
                continue
            seen[ns] = nc
            counter += 1
            heapq.heappush(heap, (nc, counter, ns, ops + (op,)))
        if counter % 200000 < 60:
            print(f"cost {cost} seen {len(seen)} heap {len(heap)} {time.time()-t0:.0f}s")
    return None


t0 = time.time()
res = search()
if res:
    cost, ops = res
    print("FOUND cost", cost)
    for op in ops:
        print("  ", op)
print(f"{time.time()-t0:.1f}s")
