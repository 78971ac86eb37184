# Generated by Django 5.2.8 on 2026-10-19 09:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="VerificationRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                ("max_n", models.PositiveIntegerField()),
                ("seed", models.IntegerField(default=0)),
                ("budget", models.PositiveBigIntegerField()),
                ("passed", models.PositiveIntegerField(default=0)),
                ("failed", models.PositiveIntegerField(default=0)),
                ("errored", models.PositiveIntegerField(default=0)),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "ordering": ["-created_at"],
            },
        ),
        migrations.CreateModel(
            name="ClaimRecord",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "claim_id",
                    models.CharField(
                        choices=[
                            ("Prop1_1", "Vertex-transitivity of H(n,k)"),
                            ("Prop1_2", "Arc-transitivity of H(n,k)"),
                            ("Cor1_3", "Maximum connectivity of H(n,k)"),
                            ("Thm1_5", "Aut(H(n,1)) = Sym([n]) x Z2"),
                            ("Thm1_6", "Aut of the middle-levels graphs"),
                            ("Item1_QnAut", "Order of Aut(Q_n)"),
                            (
                                "Item1_QnStructure",
                                "Aut(Q_n) generated by translations and Sym([n])",
                            ),
                            ("Item1_BLIso", "BL_n isomorphic to Q_n"),
                            ("Lemma3_1", "Fixing one part fixes everything"),
                            ("Lemma3_3", "Automorphisms preserve or swap the parts"),
                            ("Lemma3_5", "Binomial monotonicity"),
                            ("CommonNeighbors", "Common-neighbour counts in H(n,k)"),
                            (
                                "BipartiteDouble",
                                "H(n,k) is the bipartite double of K(n,k)",
                            ),
                            (
                                "MiddleCube",
                                "H(2m+1,m) is the middle-levels subgraph of the cube",
                            ),
                            ("Thm3_6", "Aut(H(n,k)) = Sym([n]) x Z2"),
                            ("Thm3_7", "Aut(K(n,k)) = Sym([n])"),
                            ("Thm3_7Lift", "Kneser automorphisms lift to H(n,k)"),
                            ("EKR", "Independence number of K(n,k)"),
                            ("JohnsonAut", "Order of Aut(J(n,k))"),
                        ],
                        max_length=32,
                    ),
                ),
                ("instance", models.CharField(max_length=32)),
                ("expected", models.JSONField(null=True)),
                ("observed", models.JSONField(null=True)),
                ("passed", models.BooleanField()),
                ("elapsed", models.DurationField()),
                ("citation", models.TextField()),
                ("error", models.TextField(blank=True)),
                (
                    "run",
                    models.ForeignKey(
                        on_delete=django.db.models.deletion.CASCADE,
                        related_name="records",
                        to="symmetry.verificationrun",
                    ),
                ),
            ],
            options={
                "ordering": ["id"],
            },
        ),
    ]
