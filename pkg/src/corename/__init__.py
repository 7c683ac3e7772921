"""corename: mining, grouping, analysis, and recommendation of co-renamed identifiers."""

__version__ = "0.1.0"
