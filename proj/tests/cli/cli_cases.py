"""End-to-end cases for the resprime command-line tool.

Usage: cli_cases.py RESPRIME_BINARY CASE
"""

import subprocess
import sys
import tempfile
from pathlib import Path

EX1_F = "9x^4+3x^3-2x^2+x-1"
EX1_G = "x^4-x^3-x^2+3x+35"


def run(binary, *args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout + proc.stderr


def fnv1a64(text):
    h = 0xCBF29CE484222325
    for byte in text.encode():
        h ^= byte
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def redigest(cert_text):
    body = cert_text[: cert_text.index("digest = ")]
    return body + "digest = " + fnv1a64(body) + "\nend\n"


def first_certificate(text):
    start = text.index("resprime-certificate")
    end = text.index("\nend\n", start) + len("\nend\n")
    return text[start:end]


def expect(cond, what, output=""):
    if not cond:
        print(f"FAILED: {what}\n{output}")
        sys.exit(1)


def case_resultant(b):
    code, out = run(b, "resultant", EX1_F, EX1_G)
    expect(code == 0 and out.strip() == "9794181403", "resultant of the first example", out)
    for method in ("prs", "sylvester"):
        code, out = run(b, "resultant", EX1_F, EX1_G, "--method", method)
        expect(out.strip() == "9794181403", f"method {method}", out)


def case_quad_shift_needs_quadratic(b):
    code, out = run(b, "resultant", "[1, 2, 3]", "[1, 2, 3, 4]", "--method", "quad_shift")
    expect(code == 2 and "PreconditionViolated" in out, "quad_shift on a cubic g", out)


def case_certify_found(b):
    code, out = run(b, "certify", EX1_F, EX1_G)
    expect(code == 0 and "criterion = disk_annulus" in out, "certificate for the first example", out)


def case_certify_trap(b):
    code, out = run(b, "certify", "[15, -8, 1]", "[24, -10, 1]")
    expect(code == 1 and "resprime-certificate" not in out, "no certificate for the split pair", out)


def case_certify_linear(b):
    code, out = run(b, "certify", "x^5+x^4-x^3-2x^2-3x+15", "--g-linear", "11", "2")
    expect(code == 0 and "value.value = 2316511" in out, "linear value 2316511", out)


def case_bivar_found(b):
    code, out = run(b, "bivar", "[[x^3+2], [x^2-x], [x-1], [1-x^2], [5x+3]]", "[[-1], [1]]")
    expect(code == 0 and "bivar_degree_dominance" in out, "bivariate certificate", out)


def case_bivar_split(b):
    f = "[[1/2, 0, 1/2], [1, 5/2], [2, 5/2], [3/2, 0, 1/2]]"
    code, out = run(b, "bivar", f, "[[-1], [1]]")
    expect(code == 1, "no bivariate certificate for a polynomial divisible by Y + 1", out)


def case_bivar_malformed(b):
    code, out = run(b, "bivar", "[[x^2], [1", "[[-1], [1]]")
    expect(code == 2 and "ParseError" in out, "malformed bivariate input", out)


def case_verify(b):
    code, out = run(b, "certify", EX1_F, EX1_G)
    expect(code == 0, "certify", out)
    cert = first_certificate(out)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "cert.txt"

        path.write_text(out)
        code, res = run(b, "verify", str(path))
        expect(code == 0 and "ok: " in res, "verify every emitted certificate", res)

        tampered = cert.replace("value.resultant = 9794181403", "value.resultant = 9794181404")
        expect(tampered != cert, "tamper target present", cert)
        path.write_text(tampered)
        code, res = run(b, "verify", str(path))
        expect(code != 0 and "digest mismatch" in res, "tampered integer", res)

        path.write_text(redigest(tampered))
        code, res = run(b, "verify", str(path))
        expect(code != 0 and "does not reproduce" in res, "tampered integer with a fresh digest", res)

        lines = cert.splitlines(keepends=True)
        lines = ["criterion = no_such_criterion\n" if l.startswith("criterion = ") else l for l in lines]
        path.write_text(redigest("".join(lines)))
        code, res = run(b, "verify", str(path))
        expect(code != 0 and "unknown criterion 'no_such_criterion'" in res, "unknown criterion", res)


def main():
    binary, name = sys.argv[1], sys.argv[2]
    globals()["case_" + name](binary)
    print(f"ok {name}")


if __name__ == "__main__":
    main()
