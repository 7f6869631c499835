from PgBufferSim.Utils.Utils import *
