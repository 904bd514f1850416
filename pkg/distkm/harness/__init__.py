from distkm.harness.errors import *
from distkm.harness.outcome import *
from distkm.harness.config import *
from distkm.harness.rows import *
from distkm.harness.experiment import *
from distkm.harness.emit import *
from distkm.harness.cli import *
