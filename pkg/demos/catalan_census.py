"""Count both families side by side and list one size in full.

Both enumerators must produce the Catalan numbers; the paired listing
shows the bijection lining the two families up object by object.
"""

from ascentdyck import (
    catalan,
    enumerate_021_avoiding,
    enumerate_dyck_paths,
    iter_pairs,
)


def census(top: int = 10) -> None:
    print(f"{'n':>3} {'sequences':>10} {'paths':>10} {'catalan':>10}")
    for n in range(1, top + 1):
        nseq = sum(1 for _ in enumerate_021_avoiding(n))
        npath = sum(1 for _ in enumerate_dyck_paths(n))
        flag = "" if nseq == npath == catalan(n) else "  MISMATCH"
        print(f"{n:>3} {nseq:>10} {npath:>10} {catalan(n):>10}{flag}")


def listing(n: int = 4) -> None:
    print(f"\nall {catalan(n)} pairs at size {n}:")
    for seq, path in iter_pairs(n):
        print(f"  {str(seq):<12} <-> {path}")


if __name__ == "__main__":
    census()
    listing()
