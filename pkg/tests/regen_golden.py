"""Rewrite the CLI golden files: ``python3 tests/regen_golden.py``."""

from cli_cases import CASES, GOLDEN_DIR, capture, golden_path


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        code, out, err = capture(argv)
        if code != 0:
            raise SystemExit(f"{name}: exit {code}: {err}")
        golden_path(name).write_text(out)
        print(f"wrote {golden_path(name).name}")


if __name__ == "__main__":
    main()
