"""Module entry point: ``python -m qll``."""
from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
