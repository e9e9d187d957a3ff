"""Command-line interface for scale-free null models."""

from .main import main

if __name__ == '__main__':
    main()
