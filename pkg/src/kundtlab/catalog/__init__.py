"""Catalog of algebras, metric normal forms and subalgebras, with theorem checks."""

from .entries import CATALOG_IDS, CatalogEntry, NamedMetric, load, metric_spec

__all__ = ["CATALOG_IDS", "CatalogEntry", "NamedMetric", "load", "metric_spec"]
