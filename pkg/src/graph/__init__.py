# graph package
