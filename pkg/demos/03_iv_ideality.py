"""Reading the recombination mechanism off the I-V curve.

A diode's current follows I ~ exp(qV / (beta k T)). The ideality
factor beta says how carriers recombine: beta ~ 1 for radiative
band-to-band recombination, beta ~ 2 for trap-assisted
(Shockley-Read-Hall) recombination in the depletion region. Fitting
beta in separate bias windows shows which mechanism dominates where,
and therefore over which drive range the VOA emits most efficiently.
"""

from pathlib import Path

from voaleak import fit_ideality, load_trace

DATA = Path(__file__).resolve().parent.parent / "data"
WINDOWS = ((0.00, 0.45), (0.50, 0.80), (0.85, 0.90))


def main():
    print(__doc__)

    iv = load_trace(DATA / "iv_trace.csv", "iv")
    print(f"trace: {iv.voltages.size} samples, "
          f"{iv.voltages[0]:.2f} to {iv.voltages[-1]:.2f} V\n")

    print(f"{'window [V]':>14} {'slope [dec/V]':>14} {'beta':>7}")
    for v_lo, v_hi in WINDOWS:
        fit = fit_ideality(iv, v_lo, v_hi, temperature=300.0)
        print(f"{v_lo:>6.2f}-{v_hi:<6.2f} {fit.slope:>14.3f} {fit.beta:>7.3f}")

    print("""
Low bias shows beta well above 2: leakage paths and series effects.
The middle window drops toward 2, the signature of depletion-region
recombination. Near strong injection beta rises again as series
resistance bends the curve over. The practical point for security:
the device emits measurably across the whole usable attenuation
range, so "just drive it gently" is not a countermeasure.
""")


if __name__ == "__main__":
    main()
