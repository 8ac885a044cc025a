"""One module per instance file format.

Every parser module follows the same pattern:

1. Define FILETYPE, the name the format is selected by.
2. Expose ``parse(contents) -> instance`` that reads the whole file.
3. Raise ParseError (or MatchNotFoundError) on malformed input, reporting the line.

Use .utils.regex_search() in place of re.search() for header lines so a missing
match always surfaces as MatchNotFoundError.
"""

SUPPORTED_FILETYPES = ("points", "lp", "graph", "knapsack", "unconstrained")
