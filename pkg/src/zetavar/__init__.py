"""Statistics of the zeros of the Riemann zeta function on the critical line.

Modules by theme:

- `zeros`      ingesting tables of zero ordinates, counting functions
- `special`    auxiliary weights f, g, h, h_hat and quadrature helpers
- `primes`     von Mangoldt sieves, prime-power sums and constants
- `paircorr`   windowed pair-correlation statistics F(alpha) and shifts
- `zeta`       Riemann-Siegel evaluation of Z(t) and log|zeta| moments
- `variance`   empirical number/S-variance sweeps and model predictions
- `cli`        command-line interface (`zetavar <subcommand>`)
"""

__version__ = "0.1.0"
