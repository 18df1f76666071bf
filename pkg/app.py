"""Entry point for the ``posetdim`` command line."""
from __future__ import annotations

from src.app.cli import main


if __name__ == "__main__":
    main()
