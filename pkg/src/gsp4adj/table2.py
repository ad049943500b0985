"""Closed forms of the adjoint L-function, one LaTeX cell per case.

Rows that share a cell (VIa/VIb, VIIIa/VIIIb) repeat it.
Symbols: chi_1, chi_2, chi, xi, omega_pi and pi refer to the row's inputs.
"""

CELLS: dict[str, str] = {
    "I": r"L(s,1_{F^\times})^2L(s,\chi_1)L(s,\chi_1^{-1})L(s,\chi_2)L(s,\chi_2^{-1})"
         r"L(s,\chi_1\chi_2)L(s,\chi_1^{-1}\chi_2^{-1})L(s,\chi_1\chi_2^{-1})L(s,\chi_1^{-1}\chi_2)",
    "IIa": r"L(s,1_{F^\times})L(s,\chi^2)L(s,\chi^{-2})L(s,\nu)L(s,\chi^{-1}\nu^{1/2})L(s,\chi\nu^{1/2})",
    "IIb": r"L(s,1_{F^\times})^2L(s,\chi^2)L(s,\chi^{-2})L(s,\nu)L(s,\nu^{-1})"
           r"L(s,\chi\nu^{-1/2})L(s,\chi^{-1}\nu^{1/2})L(s,\chi\nu^{1/2})L(s,\chi^{-1}\nu^{-1/2})",
    "IIIa": r"L(s,1_{F^\times})L(s,\nu)L(s,\nu\chi)L(s,\nu\chi^{-1})",
    "IIIb": r"L(s,1_{F^\times})^2L(s,\chi)L(s,\chi^{-1})L(s,\nu)L(s,\nu^{-1})"
            r"L(s,\chi\nu)L(s,\chi\nu^{-1})L(s,\chi^{-1}\nu)L(s,\chi^{-1}\nu^{-1})",
    "IVa": r"L(s,\nu)L(s,\nu^3)",
    "IVb": r"L(s,1_{F^\times})L(s,\nu)L(s,\nu^{-1})L(s,\nu^3)",
    "IVc": r"L(s,1_{F^\times})L(s,\nu)L(s,\nu^{-1})L(s,\nu^2)L(s,\nu^3)L(s,\nu^{-3})",
    "IVd": r"L(s,1_{F^\times})^2L(s,\nu)^2L(s,\nu^{-1})^2L(s,\nu^2)L(s,\nu^{-2})L(s,\nu^3)L(s,\nu^{-3})",
    "Va": r"L(s,\nu)^2L(s,\xi)L(s,\nu\xi)",
    "Vb": r"L(s,1_{F^\times})L(s,\nu)^2L(s,\nu^{-1})L(s,\xi)L(s,\nu\xi)",
    "Vc": r"L(s,1_{F^\times})L(s,\nu)^2L(s,\nu^{-1})L(s,\xi)L(s,\nu\xi)",
    "Vd": r"L(s,1_{F^\times})^2L(s,\nu)^2L(s,\nu^{-1})^2L(s,\xi)^2L(s,\nu\xi)L(s,\nu^{-1}\xi)",
    "VIa": r"L(s,1_{F^\times})L(s,\nu)^3",
    "VIb": r"L(s,1_{F^\times})L(s,\nu)^3",
    "VIc": r"L(s,1_{F^\times})^2L(s,\nu)^3L(s,\nu^{-1})",
    "VId": r"L(s,1_{F^\times})^4L(s,\nu)^3L(s,\nu^{-1})^3",
    "VII": r"L(s,1_{F^\times})L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)})"
           r"L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)}\otimes\chi)L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)}\otimes\chi^{-1})",
    "VIIIa": r"L(s,1_{F^\times})L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)})^3",
    "VIIIb": r"L(s,1_{F^\times})L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)})^3",
    "IXa": r"L(s,\xi)L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)}\otimes\xi\nu)",
    "IXb": r"L(s,1_{F^\times})L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)})"
           r"L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)}\otimes\xi\nu)L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)}\otimes\xi\nu^{-1})",
    "X": r"L(s,1_{F^\times})L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)})L(s,\omega_\pi)L(s,\omega_\pi^{-1})",
    "XIa": r"L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)})L(s,\nu)",
    "XIb": r"L(s,1_{F^\times})L(s,\pi,{\rm Ad}_{\mathrm{GL}(2)})L(s,\nu)L(s,\nu^{-1})",
}

# Pole order at s=1 per case; "1 or 2" where it depends on the inputs.
ORDERS: dict[str, str] = {
    "I": "0", "IIa": "0", "IIb": "1", "IIIa": "0", "IIIb": "1 or 2",
    "IVa": "0", "IVb": "1", "IVc": "1", "IVd": "2",
    "Va": "0", "Vb": "1", "Vc": "1", "Vd": "2",
    "VIa": "0", "VIb": "0", "VIc": "1", "VId": "3",
    "VII": "0", "VIIIa": "0", "VIIIb": "0", "IXa": "0", "IXb": "1",
    "X": "0", "XIa": "0", "XIb": "1",
}
