"""camplens: stance-split tweet corpora and per-camp subword embeddings.

The toolkit ingests tweet archives, splits the user population into two
opposing stance camps (seed rules on profiles, then retweet-based label
propagation), trains an independent subword skip-gram embedding per camp,
and reports how each camp's embedding neighborhood characterizes entities
of interest, using neighbor ranks only.
"""

__version__ = "0.1.0"
