from . import mk_idtconfig_file
from . import mk_multiprocessing_cfg
from . import plot_history
from . import run_tool
from . import run_with_multiprocess
