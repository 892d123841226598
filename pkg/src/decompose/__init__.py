# decompose package
