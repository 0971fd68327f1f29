"""Regenerate data/seed.dat from the brute-force oracle.

Usage: python scripts/make_seed.py BUILD_DIR/lieord > data/seed.dat
"""
import concurrent.futures
import subprocess
import sys

CAP = 2_000_000
LABELS = ["PSL", "SL", "PSU", "SU", "Sp", "PSp", "Omega", "SOplus", "SOminus",
          "OmegaPlus", "OmegaMinus", "POmegaPlus", "POmegaMinus"]
EXTRA = ["PSL(4,3)", "PSL(5,2)", "PSU(4,3)", "PSU(3,7)", "PSU(3,8)", "PSp(4,5)", "Sp(4,5)",
         "Omega(5,5)", "PSL(3,7)", "Sp(6,2)"]

CONSTANTS = {
    "monster_omega": 194,
    "monster_omicron": 73,
    "monster_order": 808017424794512875886459904961710757005754368000000000,
}


def prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        m = q
        while m % p == 0:
            m //= p
        if m == 1:
            out.append(q)
    return out


def dims(label):
    if label in ("Sp", "PSp"):
        return range(2, 9, 2)
    if label == "Omega":
        return range(3, 10, 2)
    if label.startswith(("SOplus", "SOminus", "OmegaPlus", "OmegaMinus", "POmega")):
        return range(4, 11, 2)
    return range(2, 9)


def run(cli, group, cap):
    r = subprocess.run([cli, "oracle", "dump", "--group", group, "--out", "-", "--cap", str(cap)],
                       capture_output=True, text=True)
    return group, r.returncode, r.stdout or r.stderr


def main():
    cli = sys.argv[1]
    jobs = []
    for label in LABELS:
        for n in dims(label):
            for q in prime_powers(256):
                if label == "Omega" and q % 2 == 0:
                    continue
                jobs.append((f"{label}({n},{q})", CAP))
    jobs = [(g, cap) for g, cap in jobs if g not in EXTRA]
    jobs += [(g, 10_000_000) for g in EXTRA]
    records = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=2) as pool:
        for group, code, text in pool.map(lambda j: run(cli, *j), jobs):
            if code == 0:
                records[group] = text
    for group, cap in jobs:
        if group in records:
            continue
        group, code, text = run(cli, group, cap)
        if code == 0:
            records[group] = text
        else:
            sys.stderr.write(f"{group}: {text.strip()}\n")
    print("# Class numbers computed by `lieord oracle dump`; regenerate with scripts/make_seed.py.")
    for group, _ in jobs:
        if group in records:
            sys.stdout.write(records[group])
    print()
    for name, value in CONSTANTS.items():
        print(f"constant {name} {value}")


if __name__ == "__main__":
    main()
