"""Writers for instance files and reports.

Each module defines ``encode(obj, ...) -> str``; ``bifront.main.encode`` picks the
module by name.
"""

SUPPORTED_FORMATS = ("graph", "report")
