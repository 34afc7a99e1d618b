"""Where does the parasitic light sit in the spectrum?

The leaked emission is too dim for a spectrometer, but the chip's own
Mach-Zehnder interferometer can act as one. Sweeping a thermo-optic
phase shifter traces interference fringes; the fringe phase goes as
the heater power, i.e. quadratically in voltage, and the squared
voltage span between a maximum and the adjacent minimum scales with
wavelength. Ratioing the unknown emission's span against a reference
laser's span yields the center wavelength with no calibration of the
heater at all.
"""

from pathlib import Path

from voaleak import (
    bandgap_wavelength,
    center_wavelength,
    find_extrema_pair,
    load_trace,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def describe(name, pair):
    span = abs(pair.u_max ** 2 - pair.u_min ** 2)
    print(f"{name:>10}: max at {pair.u_max:.3f} V, min at {pair.u_min:.3f} V, "
          f"|dU^2| = {span:.4f} V^2")
    return span


def main():
    print(__doc__)

    reference = load_trace(DATA / "fringe_reference.csv", "fringe")
    unknown = load_trace(DATA / "fringe_voa.csv", "fringe")

    ref_pair = find_extrema_pair(reference, smooth_window=5)
    unk_pair = find_extrema_pair(unknown, smooth_window=5)
    describe("reference", ref_pair)
    describe("emission", unk_pair)

    lambda_ref = 1550.82
    lam = center_wavelength(lambda_ref, ref_pair, unk_pair)
    print(f"\nreference wavelength   : {lambda_ref:.2f} nm")
    print(f"emission center        : {lam:.2f} nm")

    gap = bandgap_wavelength(1.12)
    print(f"bandgap cutoff (1.12 eV): {gap:.0f} nm")
    print(f"""
The emission lands near {lam:.0f} nm, well below the {gap:.0f} nm
band-to-band cutoff: consistent with hot-carrier recombination in the
forward-biased junction, and comfortably inside the band where
standard telecom components still transmit. An eavesdropper tapping
the fiber can therefore see this light unless it is filtered.
""")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping the fringe plot")
        return
    fig, axes = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    for ax, trace, pair, title in (
            (axes[0], reference, ref_pair, "reference laser"),
            (axes[1], unknown, unk_pair, "VOA emission")):
        ax.plot(trace.voltages, trace.counts, lw=1)
        ax.axvline(pair.u_max, color="tab:green", ls="--", label="max")
        ax.axvline(pair.u_min, color="tab:red", ls="--", label="min")
        ax.set_ylabel("counts [s$^{-1}$]")
        ax.set_title(title)
        ax.legend()
    axes[1].set_xlabel("heater voltage [V]")
    out = Path(__file__).resolve().parent / "02_fringes.png"
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
