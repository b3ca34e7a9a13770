# Paquete de pruebas de delsarte_planes
