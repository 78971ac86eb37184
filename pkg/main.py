import os
import sys
from pathlib import Path


def main():
    """Run a symmetry command from the repository root: ``python main.py verify --all``."""
    sys.path.insert(0, str(Path(__file__).resolve().parent / "kneser_lab"))
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "kneser_lab.settings")
    from django.core.management import execute_from_command_line

    execute_from_command_line(["main.py", *sys.argv[1:]])


if __name__ == "__main__":
    main()
