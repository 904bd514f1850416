from distkm.blackbox.errors import *
from distkm.blackbox.config import *
from distkm.blackbox.seeding import *
from distkm.blackbox.lloyd import *
from distkm.blackbox.cluster import *
from distkm.blackbox.oracle import *
