// Placeholder main; the full CLI lands with the rest of the modules.
int main() { return 0; }
