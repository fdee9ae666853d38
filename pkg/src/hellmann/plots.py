"""Figure rendering for the CLI report path.

Every renderer takes the already-computed rows (the same data that goes
into the CSV/JSON artifact) and writes a PNG next to it.  matplotlib is
imported lazily with the Agg backend so library users never pay for it.
"""

from __future__ import annotations


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def render_profile(rows, path, lam):
    plt = _plt()
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    r = [row.r for row in rows]
    ax1.plot(r, [row.exact for row in rows], "k-", lw=1.2, label="exact")
    ax1.plot(r, [row.approx for row in rows], "r--", lw=1.2, label="approximation")
    ax1.set_yscale("log")
    ax1.set_ylabel("value")
    ax1.legend(frameon=False)
    ax1.set_title(f"inverse-coordinate approximation, lam = {lam:g}")
    ax2.plot(r, [row.rel_err for row in rows], "b-", lw=1.2)
    ax2.set_xlabel("r")
    ax2.set_ylabel("relative error")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_spectrum(rows, path):
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7, 5))
    by_ell: dict[int, list] = {}
    for row in rows:
        by_ell.setdefault(row["ell"], []).append(row)
    for ell, group in sorted(by_ell.items()):
        ns = [g["n"] for g in group]
        es = [g["energy_re"] for g in group]
        ax.plot(ns, es, "o-", ms=4, label=f"ell = {ell}")
    ax.set_xlabel("n")
    ax.set_ylabel("Re E")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_wavefunction(rows, path):
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = [row["u"] for row in rows]
    ax.plot(xs, [row["value_re"] for row in rows], "b-", lw=1.2, label="Re R")
    if any(abs(row["value_im"]) > 0 for row in rows):
        ax.plot(xs, [row["value_im"] for row in rows], "r--", lw=1.2, label="Im R")
    ax.axhline(0.0, color="0.7", lw=0.8)
    ax.set_xlabel("u")
    ax.set_ylabel("R(u)")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_phase(rows, path):
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7, 4.5))
    by_ell: dict[int, list] = {}
    for row in rows:
        by_ell.setdefault(row["ell"], []).append(row)
    for ell, group in sorted(by_ell.items()):
        es = [g["E"] for g in group]
        ds = [g["delta_mod_pi"] for g in group]
        ax.plot(es, ds, "o-", ms=3, lw=1.0, label=f"ell = {ell}")
    ax.set_xlabel("E")
    ax.set_ylabel("delta (mod pi)")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_validation(report, path):
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7.5, 5))
    markers = {0.001: "o", 0.01: "s"}
    for lam in (0.001, 0.01):
        for b, color in ((0.5, "tab:blue"), (-0.5, "tab:red")):
            xs, ys = [], []
            for i, row in enumerate(report["rows"]):
                if row["params"]["lam"] == lam and row["params"]["b"] == b:
                    xs.append(i)
                    ys.append(row["deviations"]["table_vs_analytic"])
            ax.semilogy(xs, ys, markers[lam], color=color, ms=5,
                        label=f"b = {b:+g}, lam = {lam:g}")
    ax.set_xlabel("row index")
    ax.set_ylabel("|table - analytic|")
    ax.legend(frameon=False, fontsize=8)
    ax.set_title("reference-table deviations under the frozen convention")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
