from importlib.metadata import PackageNotFoundError
from importlib.metadata import version

try:
    __version__ = version("lefschetzgl")
except PackageNotFoundError:
    __version__ = "0.3.0"

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from lefschetzlib.typing import *

from lefschetzlib.constants import *

from lefschetzlib.padic.valuation import *
from lefschetzlib.padic.neatness import *

from lefschetzlib.group.root_datum import *
from lefschetzlib.group.contraction import *

from lefschetzlib.cohomology.euler import *

from lefschetzlib.graph.geodesic_graph import *
from lefschetzlib.graph.geodesics import *
from lefschetzlib.graph.character import *

from lefschetzlib.lefschetz.spectral import *
from lefschetzlib.lefschetz.geometric import *
from lefschetzlib.lefschetz.hecke import *
from lefschetzlib.lefschetz.verifier import *

from lefschetzlib.suite.suite import *
from lefschetzlib.suite.local_suites import *
from lefschetzlib.suite.graph_suites import *
from lefschetzlib.suite.report_writer import *
