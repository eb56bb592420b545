"""Allow running as python -m terna."""

from terna.cli.main import main

if __name__ == "__main__":
    main()
