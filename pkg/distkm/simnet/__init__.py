from distkm.simnet.errors import *
from distkm.simnet.seeds import *
from distkm.simnet.machine import *
from distkm.simnet.ledger import *
from distkm.simnet.timer import *
from distkm.simnet.steps import *
from distkm.simnet.network import *
