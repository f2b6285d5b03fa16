"""Command-line interface and the polynomial text parser."""
