from django.urls import path

from . import views

urlpatterns = [
    # Computations
    path('schur/', views.SchurView.as_view(), name='schur'),
    path('elementary/', views.ElementaryView.as_view(), name='elementary'),
    path('hook/', views.HookView.as_view(), name='hook'),
    path('apply/', views.ApplyView.as_view(), name='apply'),
    path('matrices/', views.MatricesView.as_view(), name='matrices'),

    # Verification
    path('verify/<str:suite>/', views.VerifyView.as_view(), name='verify'),
    path('runs/', views.VerificationRunListView.as_view(), name='runs'),
]
