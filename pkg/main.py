"""
Entry point for the HyperTorsion command-line tool.

    python main.py family --label Ct10 --param t=1 | python main.py order --f -
"""
import sys

from src.cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
