"""Key rate under a passive Trojan-horse attack (pre-encoder leak).

If the glowing VOA sits before the encoder, its light picks up the
same basis/bit modulation as the signal and leaks it toward the
channel: a Trojan-horse attack that needs no probe light. The GLLP
quantum-coin argument charges for this by inflating the single-photon
phase-error rate via the coin imbalance Delta(mu), shrinking the
secure rate and, above all, the secure range.
"""

from pathlib import Path

from voaleak import ScenarioConfig, coin_imbalance, run_scenario

LEVELS = (0.0048, 0.0388, 0.0977)


def last_positive(rows, attr):
    dist = None
    for row in rows:
        if getattr(row, attr) > 0.0:
            dist = row.distance_km
    return dist


def main():
    print(__doc__)

    print(f"{'mu_leak':>8} {'Delta(mu)':>11}")
    for mu in LEVELS:
        print(f"{mu:>8.4f} {coin_imbalance(mu):>11.6f}")

    sweeps = {}
    for mu in LEVELS:
        cfg = ScenarioConfig(mode="passive_tha", mu_leak=mu,
                             distance_min=0.0, distance_max=400.0, step=1.0)
        sweeps[mu] = run_scenario(cfg)

    base_rows = sweeps[LEVELS[0]].rows
    print(f"\n{'L [km]':>7} {'ideal':>11} "
          + " ".join(f"mu={mu:<7.4f}" for mu in LEVELS))
    for d in (0, 5, 10, 25, 50, 100, 200, 300):
        row = next(r for r in base_rows if r.distance_km == d)
        rates = [next(r for r in sweeps[mu].rows
                      if r.distance_km == d).rate_contaminated
                 for mu in LEVELS]
        print(f"{d:>7.0f} {row.rate_baseline:>11.3e} "
              + " ".join(f"{r:>10.3e}" for r in rates))

    print(f"\nsecure range (last positive rate):")
    print(f"{'no leak':>12}: {last_positive(base_rows, 'rate_baseline'):.0f} km")
    for mu in LEVELS:
        cut = last_positive(sweeps[mu].rows, "rate_contaminated")
        print(f"{f'mu={mu:.4f}':>12}: {cut:.0f} km")

    print("""
The coin penalty scales like Delta/Y1, and the single-photon yield Y1
falls exponentially with distance, so a leak that is harmless at the
transmitter output wipes out the long-distance tail: the worst-case
drive collapses the secure range by roughly 95%. Filtering or shielding
the pre-encoder emission is not optional.
""")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the rate plot")
        return
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.semilogy([r.distance_km for r in base_rows],
                [r.rate_baseline for r in base_rows], label="no leak")
    for mu in LEVELS:
        rows = sweeps[mu].rows
        ax.semilogy([r.distance_km for r in rows if r.rate_contaminated > 0],
                    [r.rate_contaminated for r in rows
                     if r.rate_contaminated > 0],
                    label=f"mu_leak = {mu}")
    ax.set_xlabel("fiber length [km]")
    ax.set_ylabel("secret key rate [per pulse]")
    ax.set_title("passive Trojan-horse attack, GLLP coin bound")
    ax.legend()
    out = Path(__file__).resolve().parent / "05_passive_tha.png"
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
