import os
import sys

# In-tree runs (ctest) stage the package under <build>/python; installed
# wheels need no help.
_staged = os.environ.get("GIBBSFRAG_STAGED_PKG")
if _staged and _staged not in sys.path:
    sys.path.insert(0, _staged)
