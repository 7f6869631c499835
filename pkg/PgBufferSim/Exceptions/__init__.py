from PgBufferSim.Exceptions.Exceptions import PgBufferSimException, PgBufferSimValidationException, \
    InvalidParameterException, TraceParseException, TraceValidationException, ConfigException, \
    InvalidStateException, PinUnderflowException, NoVictimException, PolicyContractViolation, SimulationException, \
    UsageException
